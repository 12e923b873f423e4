import math
import random
from fractions import Fraction

import pytest

from dnacodes import engine, oracles
from dnacodes.alphabet import int_to_bits, tau_decode
from dnacodes.channel import EditEvent, EditKind, apply_edit
from dnacodes.constructions import (
    C2Code, C3Code, CLEpsParams, ConcatParams, LocalParams, c2_decode, c2_encode,
    c4_build_local, cl_eps_decode, cl_eps_encode, extend, find_vt_class, pi, pi_inverse, unextend,
)
from dnacodes.ecc import vt_syndromes
from dnacodes.alphabet import dna_to_z4
from dnacodes.errors import DecodingError, ValidationError

EPS = Fraction(1, 10)


@pytest.fixture(scope="module")
def tiny():
    return ConcatParams(CLEpsParams(4, EPS, 10), 5, 2)


@pytest.fixture(scope="module")
def c3(tiny):
    return C3Code(tiny)


def test_inner_params():
    p = CLEpsParams(4, 0.1, 10)
    assert p.eps == EPS
    assert p.balanced_count == 672
    assert p.f_count == 31
    assert p.cardinality == 512 * 31
    with pytest.raises(ValidationError):
        CLEpsParams(4, 0.05, 10)


def test_inner_word_properties_exhaustive():
    # tau^-1(c || d) is 3-dominant, 4-RLL and eps-balanced for every pair
    p = CLEpsParams(4, EPS, 10)
    cs = engine.enumerate_words(engine.f_spec(4), 10)
    ds = engine.enumerate_words(p.balanced, 10)
    for c in cs:
        for d in ds[::7]:
            x = tau_decode(c, d)
            assert oracles.is_dominant(x, 3)
            assert oracles.max_run_length(x) <= 4
            assert oracles.is_balanced(x, oracles.Global(EPS))


def test_inner_round_trip():
    p = CLEpsParams(4, EPS, 12)
    rng = random.Random(2)
    for _ in range(300):
        ci = rng.randrange(p.f_count)
        data = int_to_bits(rng.randrange(2 ** 11), 11)
        w = cl_eps_encode(ci, data, p)
        assert cl_eps_decode(w, p) == (ci, data)


def test_extend_rules():
    assert extend("CAAG").startswith("CT")
    assert extend("AAAG") == "TCAAAGTC"
    assert extend("AAAT").endswith("CT")
    assert unextend(extend("GATC")) == "GATC"
    with pytest.raises(DecodingError):
        unextend("TCAAAGCT")


def test_extended_junctions():
    p = CLEpsParams(4, EPS, 10)
    rng = random.Random(4)
    for _ in range(500):
        u = cl_eps_encode(rng.randrange(p.f_count), int_to_bits(rng.randrange(512), 9), p)
        v = cl_eps_encode(rng.randrange(p.f_count), int_to_bits(rng.randrange(512), 9), p)
        w = extend(u) + extend(v)
        assert oracles.is_dominant(w, 3)
        assert oracles.max_run_length(w) <= 4
        assert oracles.is_m_ssa(w, 3)


def test_pi_bijection(tiny):
    blocks = {pi(e, tiny) for e in range(tiny.q)}
    assert len(blocks) == tiny.q
    for e in range(tiny.q):
        assert pi_inverse(pi(e, tiny), tiny) == e


def test_concat_params(tiny):
    assert (tiny.t, tiny.k, tiny.block_length, tiny.N) == (6, 4, 14, 84)
    assert tiny.rate == pytest.approx((6 / 84) * (1 - 2 / 6) * math.log2(5))
    with pytest.raises(ValidationError):
        ConcatParams(CLEpsParams(4, EPS, 10), 4, 2)


def test_c2_clean_and_double_error(tiny):
    code = C2Code(tiny)
    rng = random.Random(7)
    msg = code.random_message(rng)
    c = c2_encode(msg, tiny)
    assert c2_decode(c, tiny) == msg
    failures = 0
    for _ in range(200):
        msg = code.random_message(rng)
        c = code.encode(msg)
        b1, b2 = rng.sample(range(tiny.t), 2)
        for b in (b1, b2):
            pos = b * tiny.block_length + rng.randrange(tiny.block_length) + 1
            sym = rng.choice([s for s in "ACGT" if s != c[pos - 1]])
            c = apply_edit(c, EditEvent(EditKind.SUBSTITUTION, pos, sym))
        try:
            got = code.decode(c)
        except DecodingError:
            failures += 1
            continue
        failures += got != msg
    # two substitutions in different blocks exceed the radius
    assert failures > 150


def test_c2_message_ints(tiny):
    code = C2Code(tiny)
    for v in (0, 1, 311, 624):
        assert code.message_to_int(code.message_from_int(v)) == v


def test_vt_search(c3, tiny):
    res = c3.search
    assert res.exhaustive and res.total == 625
    assert c3.size >= math.ceil(625 / (4 * tiny.N))
    assert math.log2(625) - math.log2(c3.size) <= 2 + math.log2(tiny.N)
    for w in res.subcode:
        assert vt_syndromes(dna_to_z4(w), tiny.N) == (c3.cls.a, c3.cls.b)
    assert max(res.bucket_sizes.values()) == c3.size


def test_find_vt_class_ties():
    res = find_vt_class(["AC", "CA"])
    assert res.cls.N == 2 and len(res.subcode) == 1


def test_c3_substitution_never_stays_in_subcode(c3):
    members = set(c3.search.subcode)
    for w in members:
        for p in range(1, len(w) + 1):
            for s in "ACGT":
                if s != w[p - 1]:
                    assert apply_edit(w, EditEvent(EditKind.SUBSTITUTION, p, s)) not in members


def test_c3_rejects_far_lengths(c3):
    w = c3.encode(c3.members[0])
    with pytest.raises(ValidationError):
        c3.decode(w[:-2])


def test_local_params_delta():
    lp = LocalParams(56, 4, 113, EPS)
    assert lp.delta == Fraction(55) * (1 - 2 * EPS) / 113 + EPS
    assert lp.delta >= EPS
    with pytest.raises(ValidationError):
        LocalParams(56, 4, 112, EPS)
    with pytest.raises(ValidationError):
        LocalParams(56, 2, 113, EPS)


def test_c4_small():
    inner = ConcatParams(CLEpsParams(4, EPS, 10), 3, 2)
    code = c4_build_local(inner, 3, 2 * inner.N + 1)
    assert code.length == 3 * inner.N
    rng = random.Random(8)
    for _ in range(30):
        msg = code.random_message(rng)
        c = code.encode(msg)
        assert oracles.is_balanced(c, oracles.Local(2 * inner.N + 1, code.delta))
        # windows inside a single block meet the inner tolerance
        assert oracles.is_balanced(c[:inner.N], oracles.Global(EPS))
        for kind, pos, sym in (("del", 5, ""), ("ins", 40, "G"), ("sub", 77, "A" if c[76] != "A" else "C")):
            assert code.decode(apply_edit(c, EditEvent(EditKind(kind), pos, sym))) == msg
