"""Brute-force constraint checkers.

These are deliberately the simplest correct implementations; every encoder
in the package is tested against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .alphabet import check_dna, gc_weight, reverse_complement
from .errors import ValidationError

Number = Union[int, float, Fraction]


def as_fraction(x: Number) -> Fraction:
    """Exact rational for a balance tolerance.

    Floats go through their shortest repr so that ``0.1`` means 1/10.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def is_m_ssa(x: str, m: int) -> bool:
    """True iff no two index-disjoint length-m windows are reverse complements.

    Longer stems contain a length-m stem, so comparing windows of length
    exactly m is enough.  Overlapping windows are allowed to match.
    """
    if m < 1:
        raise ValidationError("m must be positive")
    check_dna(x)
    n = len(x)
    windows = [x[i:i + m] for i in range(n - m + 1)]
    for i, w in enumerate(windows):
        rc = reverse_complement(w)
        for j in range(i + m, len(windows)):
            if windows[j] == rc:
                return False
    return True


def max_run_length(x: Sequence) -> int:
    best = run = 0
    prev = object()
    for s in x:
        run = run + 1 if s == prev else 1
        prev = s
        best = max(best, run)
    return best


def is_dominant(x: Sequence, m: int) -> bool:
    """Every length-m window has more than m/2 'light' symbols.

    Light means T or C for a DNA ``str`` and 0 for a binary sequence.
    Sequences shorter than m are vacuously dominant.
    """
    if m < 1 or m % 2 == 0:
        raise ValidationError(f"dominance needs odd positive m, got {m}")
    if isinstance(x, str):
        check_dna(x)
        light = [1 if nt in "TC" else 0 for nt in x]
    else:
        light = [1 if b == 0 else 0 for b in x]
    for i in range(len(light) - m + 1):
        if 2 * sum(light[i:i + m]) <= m:
            return False
    return True


@dataclass(frozen=True)
class Global:
    eps: Number


@dataclass(frozen=True)
class Partition:
    s: int
    eps: Number


@dataclass(frozen=True)
class Local:
    s: int
    eps: Number


BalanceKind = Union[Global, Partition, Local]


def _within(weight: int, size: int, eps: Fraction) -> bool:
    return abs(Fraction(weight, size) - Fraction(1, 2)) <= eps


def is_balanced(x: str, kind: BalanceKind) -> bool:
    check_dna(x)
    eps = as_fraction(kind.eps)
    if not 0 <= eps < Fraction(1, 2):
        raise ValidationError(f"balance tolerance {kind.eps} outside [0, 0.5)")
    n = len(x)
    if isinstance(kind, Global):
        if n == 0:
            raise ValidationError("global balance of an empty sequence is undefined")
        return _within(gc_weight(x), n, eps)
    if kind.s < 1:
        raise ValidationError("segment/window size must be positive")
    if isinstance(kind, Partition):
        if n % kind.s:
            raise ValidationError(f"partition size {kind.s} does not divide length {n}")
        return all(_within(gc_weight(x[i:i + kind.s]), kind.s, eps) for i in range(0, n, kind.s))
    if isinstance(kind, Local):
        if kind.s > n:
            raise ValidationError(f"window {kind.s} longer than sequence ({n})")
        return all(_within(gc_weight(x[i:i + kind.s]), kind.s, eps) for i in range(n - kind.s + 1))
    raise ValidationError(f"unknown balance kind {kind!r}")


def max_local_deviation(x: str, s: int) -> Fraction:
    """Largest |wt_GC(window)/s - 1/2| over all length-s windows."""
    gc = [1 if nt in "GC" else 0 for nt in x]
    w = sum(gc[:s])
    worst = abs(Fraction(w, s) - Fraction(1, 2))
    for i in range(s, len(gc)):
        w += gc[i] - gc[i - s]
        worst = max(worst, abs(Fraction(w, s) - Fraction(1, 2)))
    return worst
