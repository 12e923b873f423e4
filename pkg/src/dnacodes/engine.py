"""Enumerative coding for sliding-window constrained languages.

A :class:`ConstraintSpec` describes a set of words over ``{0..k-1}``: every
sliding window must satisfy the window predicates, an optional additive
counter (e.g. Hamming weight) must end inside a range, and optionally the
word must open with exactly ``i`` zeros followed by a one.  The spec is
compiled once into a :class:`CodecAutomaton` whose exact count table drives
counting, lexicographic ranking/unranking and growth-rate estimates.

All counts are Python ints, so they are exact at any length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

from scipy.optimize import bisect

from .errors import ValidationError
from .oracles import Number, as_fraction


@dataclass(frozen=True)
class ZeroDominant:
    """Every length-m window holds more than m/2 zeros."""

    m: int


@dataclass(frozen=True)
class RLL:
    """No run longer than ``ell``."""

    ell: int


@dataclass(frozen=True)
class And:
    parts: tuple


Window = Union[ZeroDominant, RLL, And]


@dataclass(frozen=True)
class Counter:
    """Additive counter: symbol ``a`` adds ``weights[a]``; the final total
    must lie in ``[lo, hi]``."""

    weights: tuple
    lo: int
    hi: int


@dataclass(frozen=True)
class ConstraintSpec:
    alphabet_size: int = 2
    window: Window | None = None
    counter: Counter | None = None
    # exact number of zeros in the first run (binary only); 0 means "starts with 1"
    leading_zeros: int | None = None
    label: str = field(default="", compare=False)

    def windows(self) -> tuple:
        return _flatten(self.window)

    def describe(self) -> dict:
        out: dict = {"alphabet_size": self.alphabet_size}
        if self.label:
            out["label"] = self.label
        out["window"] = [
            {"zero_dominant": w.m} if isinstance(w, ZeroDominant) else {"rll": w.ell}
            for w in self.windows()
        ]
        if self.counter is not None:
            out["counter"] = {"weights": list(self.counter.weights),
                              "lo": self.counter.lo, "hi": self.counter.hi}
        if self.leading_zeros is not None:
            out["leading_zeros"] = self.leading_zeros
        return out


def _flatten(window) -> tuple:
    if window is None:
        return ()
    if isinstance(window, And):
        return tuple(w for part in window.parts for w in _flatten(part))
    if isinstance(window, (list, tuple)):
        return tuple(w for part in window for w in _flatten(part))
    return (window,)


def validate_spec(spec: ConstraintSpec) -> None:
    if spec.alphabet_size not in (2, 4):
        raise ValidationError("alphabet_size must be 2 or 4")
    for w in spec.windows():
        if isinstance(w, ZeroDominant):
            if w.m % 2 == 0 or not 3 <= w.m <= 11:
                raise ValidationError(f"dominance window must be odd and in 3..11, got {w.m}")
        elif isinstance(w, RLL):
            if w.ell < 3:
                raise ValidationError(f"run-length limit must be >= 3, got {w.ell}")
        else:
            raise ValidationError(f"unknown window predicate {w!r}")
    c = spec.counter
    if c is not None:
        if len(c.weights) != spec.alphabet_size or any(v < 0 for v in c.weights):
            raise ValidationError("counter needs one non-negative weight per symbol")
    if spec.leading_zeros is not None:
        if spec.alphabet_size != 2 or spec.leading_zeros < 0:
            raise ValidationError("leading_zeros needs a binary alphabet and a value >= 0")


# -- spec constructors for the sets used by the constructions ---------------

def s0_spec(m: int) -> ConstraintSpec:
    """Binary '0'-m-dominant words."""
    return ConstraintSpec(window=ZeroDominant(m), label=f"S0(m={m})")


def rll_spec(ell: int) -> ConstraintSpec:
    return ConstraintSpec(window=RLL(ell), label=f"RLL(ell={ell})")


def f_spec(ell: int) -> ConstraintSpec:
    """'0'-3-dominant and ell-run-length-limited binary words."""
    return ConstraintSpec(window=And((ZeroDominant(3), RLL(ell))), label=f"f(ell={ell})")


def fi_spec(ell: int, i: int) -> ConstraintSpec:
    """Members of f(ell, .) whose first run holds exactly ``i`` zeros."""
    return ConstraintSpec(window=And((ZeroDominant(3), RLL(ell))), leading_zeros=i,
                          label=f"f{i}(ell={ell})")


def f0_spec(ell: int) -> ConstraintSpec:
    return fi_spec(ell, 0)


def balance_range(n: int, eps: Number) -> tuple[int, int]:
    """Inclusive weight range ``[ceil((1/2-eps)n), floor((1/2+eps)n)]``."""
    e = as_fraction(eps)
    if not 0 <= e < Fraction(1, 2):
        raise ValidationError(f"eps must lie in [0, 0.5), got {eps}")
    lo = math.ceil((Fraction(1, 2) - e) * n)
    hi = math.floor((Fraction(1, 2) + e) * n)
    return lo, hi


def balanced_spec(n: int, eps: Number) -> ConstraintSpec:
    """Binary words of length n whose weight is within eps*n of n/2."""
    lo, hi = balance_range(n, eps)
    return ConstraintSpec(counter=Counter((0, 1), lo, hi), label=f"balanced(n={n},eps={eps})")


# -- automaton ---------------------------------------------------------------

class CodecAutomaton:
    """Compiled form of a spec.

    States are ``(suffix, weight, lead)``: the last few symbols needed by the
    window predicates, the running counter total (clipped states above
    ``hi`` are dropped), and the number of forced leading zeros still owed
    (``-1`` once the forced prefix is done).  ``counts[k][s]`` is the number
    of ways to finish from state ``s`` with ``k`` symbols left.
    """

    def __init__(self, spec: ConstraintSpec):
        validate_spec(spec)
        self.spec = spec
        self.k = spec.alphabet_size
        self._windows = spec.windows()
        self._history = max(
            [w.m - 1 if isinstance(w, ZeroDominant) else w.ell for w in self._windows],
            default=0,
        )
        self._build()
        self.counts: list[list[int]] = [[1 if a else 0 for a in self.accept]]

    def _legal(self, suffix: tuple, a: int) -> bool:
        w = suffix + (a,)
        for pred in self._windows:
            if isinstance(pred, ZeroDominant):
                if len(w) >= pred.m and 2 * w[-pred.m:].count(0) <= pred.m:
                    return False
            else:
                if len(w) > pred.ell and all(b == a for b in w[-pred.ell - 1:]):
                    return False
        return True

    def _step(self, state: tuple, a: int):
        suffix, weight, lead = state
        if lead > 0:
            if a != 0:
                return None
            lead -= 1
        elif lead == 0:
            if a != 1:
                return None
            lead = -1
        if not self._legal(suffix, a):
            return None
        c = self.spec.counter
        if c is not None:
            weight += c.weights[a]
            if weight > c.hi:
                return None
        h = self._history
        new_suffix = (suffix + (a,))[-h:] if h else ()
        return (new_suffix, weight, lead)

    def _build(self) -> None:
        lead0 = -1 if self.spec.leading_zeros is None else self.spec.leading_zeros
        start = ((), 0, lead0)
        index = {start: 0}
        states = [start]
        trans: list[list[int]] = []
        i = 0
        while i < len(states):
            row = []
            for a in range(self.k):
                nxt = self._step(states[i], a)
                if nxt is None:
                    row.append(-1)
                    continue
                if nxt not in index:
                    index[nxt] = len(states)
                    states.append(nxt)
                row.append(index[nxt])
            trans.append(row)
            i += 1
        self.states = states
        self.trans = trans
        c = self.spec.counter
        self.accept = [
            (c is None or c.lo <= w <= c.hi) and lead <= 0
            for (_, w, lead) in states
        ]
        self.start = 0

    @property
    def n_states(self) -> int:
        return len(self.states)

    def table(self, n: int) -> list[list[int]]:
        """Count table up to length ``n`` (extended on demand)."""
        counts = self.counts
        trans = self.trans
        while len(counts) <= n:
            prev = counts[-1]
            counts.append([
                sum(prev[t] for t in row if t >= 0) for row in trans
            ])
        return counts

    def count(self, n: int) -> int:
        if n < 0:
            raise ValidationError("length must be non-negative")
        return self.table(n)[n][self.start]

    def rank(self, x: Sequence[int]) -> int:
        n = len(x)
        counts = self.table(n)
        s = self.start
        r = 0
        for i, a in enumerate(x):
            if not 0 <= a < self.k:
                raise ValidationError(f"symbol {a!r} outside alphabet")
            rem = n - i - 1
            row = self.trans[s]
            for b in range(a):
                if row[b] >= 0:
                    r += counts[rem][row[b]]
            s = row[a]
            if s < 0:
                raise ValidationError(f"sequence leaves the constrained set at position {i}")
        if not self.accept[s]:
            raise ValidationError("sequence is not accepted at its end")
        return r

    def unrank(self, n: int, index: int) -> tuple:
        total = self.count(n)
        if not 0 <= index < total:
            raise ValidationError(f"index {index} outside [0, {total})")
        counts = self.counts
        s = self.start
        out = []
        for i in range(n):
            rem = n - i - 1
            for a, t in enumerate(self.trans[s]):
                if t < 0:
                    continue
                c = counts[rem][t]
                if index < c:
                    out.append(a)
                    s = t
                    break
                index -= c
        return tuple(out)

    def contains(self, x: Sequence[int]) -> bool:
        s = self.start
        for a in x:
            if not 0 <= a < self.k:
                return False
            s = self.trans[s][a]
            if s < 0:
                return False
        return self.accept[s]

    def iter_words(self, n: int) -> Iterator[tuple]:
        """All members of length n in lexicographic order."""
        counts = self.table(n)
        if counts[n][self.start] == 0:
            return
        stack = [(self.start, ())]
        while stack:
            s, prefix = stack.pop()
            if len(prefix) == n:
                yield prefix
                continue
            rem = n - len(prefix) - 1
            row = self.trans[s]
            for a in reversed(range(self.k)):
                t = row[a]
                if t >= 0 and counts[rem][t]:
                    stack.append((t, prefix + (a,)))


@lru_cache(maxsize=256)
def automaton(spec: ConstraintSpec) -> CodecAutomaton:
    return CodecAutomaton(spec)


def count(spec: ConstraintSpec, n: int) -> int:
    return automaton(spec).count(n)


def enumerate_words(spec: ConstraintSpec, n: int, cap: int = 1_000_000) -> list[tuple]:
    total = count(spec, n)
    if total > cap:
        raise ValidationError(f"{total} words exceed the enumeration cap {cap}")
    return list(automaton(spec).iter_words(n))


def rank(spec: ConstraintSpec, x: Sequence[int]) -> int:
    return automaton(spec).rank(tuple(x))


def unrank(spec: ConstraintSpec, n: int, index: int) -> tuple:
    return automaton(spec).unrank(n, index)


def growth_sequence(spec: ConstraintSpec, n_lo: int, n_hi: int) -> list[tuple[int, float]]:
    """``(n, count(n)/count(n-1))`` for n in ``(n_lo, n_hi]``."""
    if spec.counter is not None:
        raise ValidationError("growth rate is undefined for counter-constrained specs")
    if n_hi <= n_lo:
        raise ValidationError("need n_hi > n_lo")
    auto = automaton(spec)
    counts = auto.table(n_hi)
    out = []
    for n in range(max(n_lo, 0) + 1, n_hi + 1):
        prev, cur = counts[n - 1][auto.start], counts[n][auto.start]
        if prev == 0 or cur == 0:
            raise ValidationError(f"zero count at length {n - 1 if prev == 0 else n}")
        out.append((n, cur / prev))
    return out


def growth_rate(spec: ConstraintSpec, n_lo: int, n_hi: int) -> float:
    """Dominant-eigenvalue estimate ``count(n_hi) / count(n_hi - 1)``."""
    window_len = max(
        [w.m if isinstance(w, ZeroDominant) else w.ell + 1 for w in spec.windows()],
        default=1,
    )
    if n_lo < window_len:
        raise ValidationError(f"n_lo must be at least the window length {window_len}")
    return growth_sequence(spec, n_lo, n_hi)[-1][1]


def polynomial_root(ell: int, xtol: float = 1e-12) -> float:
    """Largest real root of ``x^(ell+1) - sum_{i=0}^{ell-2} x^i``; it lies in (1, 2)."""
    if ell < 3:
        raise ValidationError("ell must be >= 3")

    def poly(x: float) -> float:
        return x ** (ell + 1) - sum(x ** i for i in range(ell - 1))

    return bisect(poly, 1.0, 2.0, xtol=xtol)
