import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dnacodes import engine, oracles
from dnacodes.errors import ValidationError


def _lead(w):
    return next((i for i, b in enumerate(w) if b), len(w))


def brute(pred, n):
    return [w for w in itertools.product((0, 1), repeat=n) if pred(w)]


def test_f0_counts():
    spec = engine.f0_spec(4)
    assert [engine.count(spec, n) for n in range(4, 8)] == [2, 3, 3, 4]


def test_f_listing_members():
    words = ["".join(map(str, w)) for w in engine.enumerate_words(engine.f_spec(4), 7)]
    assert len(words) == 13
    assert "0000100" in words and "1001001" in words


def test_balanced_count():
    assert engine.count(engine.balanced_spec(4, 0), 4) == 6
    assert engine.count(engine.balanced_spec(10, 0.1), 10) == 672
    assert engine.count(engine.balanced_spec(3, 0), 3) == 0


def test_unrank_example():
    assert engine.unrank(engine.f0_spec(4), 7, 3) == (1, 0, 0, 1, 0, 0, 1)


@pytest.mark.parametrize("spec,pred", [
    (engine.s0_spec(5), lambda w: oracles.is_dominant(w, 5)),
    (engine.f_spec(3), lambda w: oracles.is_dominant(w, 3) and oracles.max_run_length(w) <= 3),
    (engine.rll_spec(4), lambda w: oracles.max_run_length(w) <= 4),
    (engine.f0_spec(4), lambda w: oracles.is_dominant(w, 3) and oracles.max_run_length(w) <= 4
     and w[:1] == (1,)),
    (engine.fi_spec(4, 2), lambda w: oracles.is_dominant(w, 3) and oracles.max_run_length(w) <= 4
     and _lead(w) == 2),
])
def test_enumeration_matches_brute_force(spec, pred):
    for n in range(1, 13):
        assert list(engine.enumerate_words(spec, n)) == brute(pred, n)


@pytest.mark.parametrize("ell", [3, 4, 5])
def test_f_recursion(ell):
    # counts follow a(n) = a(n-3) + ... + a(n-ell-1), whose characteristic
    # polynomial is the one polynomial_root solves
    f = engine.f_spec(ell)
    a = [engine.count(f, n) for n in range(201)]
    for n in range(10, 201):
        assert a[n] == sum(a[n - j] for j in range(3, ell + 2))
        total = sum(engine.count(engine.fi_spec(ell, i), n) for i in range(ell + 1))
        assert total == a[n]
    assert engine.growth_rate(f, 10, 200) == pytest.approx(engine.polynomial_root(ell), abs=1e-9)


def test_f4_n100_exact():
    assert engine.count(engine.f_spec(4), 100) == 3059961912097


def test_s0_m3_recursion():
    s = engine.s0_spec(3)
    a = [engine.count(s, n) for n in range(3, 60)]
    for i in range(3, len(a)):
        assert a[i] == a[i - 1] + a[i - 3]
    assert engine.growth_rate(s, 3, 400) == pytest.approx(1.4655712, abs=1e-6)


def test_polynomial_root():
    assert engine.polynomial_root(4) == pytest.approx(1.3247179572, abs=1e-9)
    r = engine.polynomial_root(4)
    assert r ** 5 - r ** 2 - r - 1 == pytest.approx(0, abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([engine.s0_spec(3), engine.f_spec(4), engine.rll_spec(3),
                        engine.balanced_spec(30, Fraction(1, 10))]),
       st.integers(0, 10 ** 9))
def test_rank_unrank_bijection(spec, seed):
    n = 30
    total = engine.count(spec, n)
    i = seed % total
    w = engine.unrank(spec, n, i)
    assert engine.rank(spec, w) == i
    assert engine.automaton(spec).contains(w)


def test_rank_is_lexicographic():
    spec = engine.f_spec(4)
    words = list(engine.enumerate_words(spec, 9))
    assert words == sorted(words)
    assert [engine.rank(spec, w) for w in words] == list(range(len(words)))


def test_errors():
    with pytest.raises(ValidationError):
        engine.count(engine.s0_spec(4), 5)
    with pytest.raises(ValidationError):
        engine.count(engine.rll_spec(2), 5)
    with pytest.raises(ValidationError):
        engine.unrank(engine.f_spec(4), 7, 13)
    with pytest.raises(ValidationError):
        engine.rank(engine.f_spec(4), (1, 1, 0))
    with pytest.raises(ValidationError):
        engine.enumerate_words(engine.rll_spec(4), 30, cap=10)
    with pytest.raises(ValidationError):
        engine.growth_rate(engine.balanced_spec(20, 0.1), 5, 20)


def test_growth_log_readings():
    g = engine.growth_rate(engine.s0_spec(3), 3, 400)
    assert 1 + math.log2(g) == pytest.approx(1.5515, abs=0.001)
