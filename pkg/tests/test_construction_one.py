import itertools
import random

import pytest

from dnacodes import engine, oracles
from dnacodes.alphabet import int_to_bits, tau_decode
from dnacodes.construction_one import (
    C1Code, C1Message, C1Params, add_guards, asymptotic_rate, c1_decode, c1_encode,
    message_from_int, message_to_int, rll_block_decode, rll_block_encode, strip_guards,
)
from dnacodes.errors import DecodingError, ValidationError


def test_block_round_trip_exhaustive():
    seen = set()
    for v in range(2 ** 10):
        y = int_to_bits(v, 10)
        w = rll_block_encode(y, 4)
        assert len(w) == 11 and oracles.max_run_length(w) <= 4
        assert rll_block_decode(w, 4) == y
        seen.add(w)
    assert len(seen) == 1024


def test_block_length_bound():
    assert engine.count(engine.rll_spec(3), 6) >= 32
    with pytest.raises(ValidationError):
        rll_block_encode((0,) * 6, 3)  # n = 7 > 2^2 + 2


def test_guards():
    assert add_guards((0, 1, 0, 1)) == (1, 0, 1, 0, 1, 0)
    assert add_guards((0, 0, 1))[0] == 1
    assert strip_guards((1, 0, 1, 0, 1, 0)) == (0, 1, 0, 1)
    with pytest.raises(DecodingError):
        strip_guards((0, 0, 1, 0, 1, 0))


def test_guarded_concatenation_runs():
    rng = random.Random(1)
    for _ in range(500):
        a = add_guards(rll_block_encode(int_to_bits(rng.randrange(1024), 10), 4))
        b = add_guards(rll_block_encode(int_to_bits(rng.randrange(1024), 10), 4))
        assert oracles.max_run_length(a + b) <= 4


def test_params_validation():
    with pytest.raises(ValidationError):
        C1Params(4, 4, 11, 3)
    with pytest.raises(ValidationError):
        C1Params(3, 4, 12, 3)
    with pytest.raises(ValidationError):
        C1Params(3, 2, 4, 1)


def test_cardinality_matches_decoder_acceptance():
    # every DNA string of length 8 that the decoder accepts is a codeword
    p = C1Params(3, 3, 6, 1)
    accepted = 0
    for w in itertools.product("ACGT", repeat=p.length):
        try:
            msg = c1_decode("".join(w), p)
        except DecodingError:
            continue
        accepted += 1
        assert c1_encode(msg, p) == "".join(w)
    assert accepted == p.cardinality == 2 ** 5 * engine.count(engine.s0_spec(3), 8)


def test_round_trip_and_constraints():
    p = C1Params(5, 4, 11, 2)
    code = C1Code(p)
    rng = random.Random(5)
    for _ in range(200):
        msg = code.random_message(rng)
        c = code.encode(msg)
        assert len(c) == 26
        assert code.decode(c) == msg
        assert oracles.is_dominant(c, 5) and oracles.is_m_ssa(c, 5)
        assert oracles.max_run_length(c) <= 4


def test_message_int_round_trip():
    p = C1Params(3, 4, 11, 3)
    for v in (0, 1, 2 ** 30 + 7, p.cardinality - 1):
        assert message_to_int(message_from_int(v, p), p) == v


def test_decode_errors():
    p = C1Params(3, 4, 11, 1)
    with pytest.raises(DecodingError) as exc:
        c1_decode("A" * 13, p)
    assert exc.value.constraint == "dominance"
    with pytest.raises(DecodingError) as exc:
        c1_decode("T" * 12, p)
    assert exc.value.constraint == "length"
    good = c1_encode(C1Message(0, (0,) * 10), p)
    x = tuple(0 for _ in good)
    # a second-bit stream with a broken guard
    bad = tau_decode(x, (0,) * 13)
    with pytest.raises(DecodingError) as exc:
        c1_decode(bad, p)
    assert exc.value.constraint == "guard"


def test_encode_rejects_bad_message():
    p = C1Params(3, 4, 11, 1)
    with pytest.raises(ValidationError):
        c1_encode(C1Message(p.x_count, (0,) * 10), p)
    with pytest.raises(ValidationError):
        c1_encode(C1Message(0, (0,) * 9), p)


def test_rate():
    assert asymptotic_rate(3, 4, 11) == pytest.approx(1.3206, abs=0.002)
    limit = asymptotic_rate(3, 4, 11)
    gaps = [C1Params(3, 4, 11, t).rate - limit for t in (5, 20, 100, 300)]
    assert all(g > 0 for g in gaps) and gaps == sorted(gaps, reverse=True)
    assert gaps[-1] < 2e-4
