import itertools
import random

import pytest

from dnacodes.ecc import (
    HammingCode, VtClass, largest_prime_at_most, signature, solve_mod, vt_decode_insdel,
    vt_syndromes,
)
from dnacodes.errors import DecodingError, ValidationError


def test_hamming_parameters():
    code = HammingCode(5, 2)
    assert (code.t, code.k) == (6, 4)
    assert code.encode((0, 0, 0, 0)) == (0,) * 6
    assert HammingCode(2, 3).t == 7


def test_hamming_7_4_exhaustive():
    code = HammingCode(2, 3)
    words = dict(code.codewords())
    assert len(words) == 16
    dists = [sum(x != y for x, y in zip(a, b)) for a, b in itertools.combinations(words.values(), 2)]
    assert min(dists) == 3
    for msg, c in words.items():
        assert code.decode(c) == msg
        for i in range(7):
            r = list(c)
            r[i] ^= 1
            assert code.decode(r) == msg


def test_hamming_q5_substitutions():
    code = HammingCode(5, 2)
    for msg, c in code.codewords():
        assert all(v == 0 for v in code.syndrome(c))
        for i in range(code.t):
            for d in range(1, 5):
                r = list(c)
                r[i] = (r[i] + d) % 5
                assert code.decode(r) == msg


def test_hamming_q5_erasures():
    code = HammingCode(5, 2)
    rng = random.Random(3)
    for msg, c in code.codewords():
        i, j = rng.sample(range(code.t), 2)
        r = list(c)
        r[i], r[j] = rng.randrange(5), rng.randrange(5)
        assert code.decode(r, erasures={i, j}) == msg
        assert code.decode(r, erasures={i, j}) == code.decode(c)


def test_hamming_distance_sampled_q7():
    code = HammingCode(7, 2)
    rng = random.Random(0)
    for _ in range(2000):
        a = tuple(rng.randrange(7) for _ in range(code.k))
        b = tuple(rng.randrange(7) for _ in range(code.k))
        if a != b:
            ca, cb = code.encode(a), code.encode(b)
            assert sum(x != y for x, y in zip(ca, cb)) >= 3


def test_hamming_errors():
    with pytest.raises(ValidationError):
        HammingCode(4, 2)
    code = HammingCode(3, 2)
    with pytest.raises(ValidationError):
        code.encode((0, 0, 3))
    with pytest.raises(DecodingError):
        code.decode((0,) * 4, erasures={0, 1, 2})


def test_solve_mod():
    assert solve_mod([[1, 1], [1, 2]], [3, 5], 7) == [1, 2]
    assert solve_mod([[1, 1], [2, 2]], [1, 3], 5) is None


def test_largest_prime():
    assert largest_prime_at_most(8192) == 8191
    assert largest_prime_at_most(10) == 7


def test_signature_examples():
    assert signature((0, 2, 1)) == (1, 0)
    assert signature((2, 2, 2, 2)) == (1, 1, 1)
    assert signature((3, 2, 1, 0)) == (0, 0, 0)
    assert vt_syndromes((0, 2, 1), 3) == (1, 3)
    assert vt_syndromes((0,) * 6) == (6 * 5 // 2 % 6, 0)


@pytest.mark.parametrize("a,b", [(0, 0), (3, 1), (7, 3)])
def test_vt_exhaustive_n8(a, b):
    N = 8
    cls = VtClass(N, a, b)
    members = [w for w in itertools.product(range(4), repeat=N) if cls.contains(w)]
    assert members
    owner = {}
    for x in members:
        for i in range(N):
            y = x[:i] + x[i + 1:]
            assert owner.setdefault(y, x) == x
            assert vt_decode_insdel(y, cls) == x
        for i in range(N + 1):
            for v in range(4):
                assert vt_decode_insdel(x[:i] + (v,) + x[i:], cls) == x


def test_vt_rejects_wrong_length():
    cls = VtClass(8, 0, 0)
    with pytest.raises(ValidationError):
        vt_decode_insdel((0,) * 8, cls)
    with pytest.raises(ValidationError):
        VtClass(8, 8, 0)
