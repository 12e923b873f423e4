"""m-SSA and ell-run-length-limited DNA codes built from two bit streams.

The first-bit stream of a codeword is a '0'-m-dominant word (addressed by
its rank in S0(m, (n+2)t)); the second-bit stream is t guarded blocks, each
an ell-RLL word of length n carrying n-1 data bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import engine
from .alphabet import bits_to_int, int_to_bits, tau_decode, tau_encode
from .errors import DecodingError, ValidationError


@dataclass(frozen=True)
class C1Params:
    m: int
    ell: int
    n: int
    t: int

    def __post_init__(self):
        if self.m % 2 == 0 or not 3 <= self.m <= 11:
            raise ValidationError(f"m must be odd with 3 <= m <= 11, got {self.m}")
        if self.ell < 3:
            raise ValidationError(f"ell must be >= 3, got {self.ell}")
        if not 2 <= self.n <= 2 ** (self.ell - 1) + self.ell - 1:
            raise ValidationError(
                f"block length n={self.n} must satisfy 2 <= n <= 2^(ell-1)+ell-1 "
                f"= {2 ** (self.ell - 1) + self.ell - 1}")
        if self.t < 1:
            raise ValidationError("t must be >= 1")
        if engine.count(engine.rll_spec(self.ell), self.n) < 2 ** (self.n - 1):
            raise ValidationError("too few RLL words for a one-redundant-bit block encoder")

    @property
    def length(self) -> int:
        return (self.n + 2) * self.t

    @property
    def y_bits(self) -> int:
        return (self.n - 1) * self.t

    @property
    def x_count(self) -> int:
        return engine.count(engine.s0_spec(self.m), self.length)

    @property
    def cardinality(self) -> int:
        return 2 ** self.y_bits * self.x_count

    @property
    def rate(self) -> float:
        return math.log2(self.cardinality) / self.length


@dataclass(frozen=True)
class C1Message:
    x_index: int
    y_bits: tuple


def rll_block_encode(y: Sequence[int], ell: int) -> tuple:
    """Map n-1 data bits to an ell-RLL word of length n by unranking."""
    n = len(y) + 1
    if n > 2 ** (ell - 1) + ell - 1:
        raise ValidationError(f"block length {n} too long for ell={ell}")
    return engine.unrank(engine.rll_spec(ell), n, bits_to_int(y))


def rll_block_decode(word: Sequence[int], ell: int) -> tuple:
    n = len(word)
    try:
        idx = engine.rank(engine.rll_spec(ell), word)
    except ValidationError as exc:
        raise DecodingError(f"block is not {ell}-RLL: {exc}", "rll") from None
    if idx >= 2 ** (n - 1):
        raise DecodingError("RLL block lies outside the encoder image", "rll-image")
    return int_to_bits(idx, n - 1)


def add_guards(block: Sequence[int]) -> tuple:
    """Wrap a block with the complements of its first and last bits."""
    block = tuple(block)
    return (1 - block[0],) + block + (1 - block[-1],)


def strip_guards(block: Sequence[int]) -> tuple:
    if len(block) < 3 or block[0] == block[1] or block[-1] == block[-2]:
        raise DecodingError("guard bits do not complement the block ends", "guard")
    return tuple(block[1:-1])


def c1_encode(msg: C1Message, p: C1Params) -> str:
    total = p.x_count
    if not 0 <= msg.x_index < total:
        raise ValidationError(f"x_index {msg.x_index} outside [0, {total})")
    if len(msg.y_bits) != p.y_bits:
        raise ValidationError(f"need {p.y_bits} y bits, got {len(msg.y_bits)}")
    x = engine.unrank(engine.s0_spec(p.m), p.length, msg.x_index)
    y2: tuple = ()
    k = p.n - 1
    for i in range(p.t):
        y2 += add_guards(rll_block_encode(msg.y_bits[i * k:(i + 1) * k], p.ell))
    return tau_decode(x, y2)


def c1_decode(c: str, p: C1Params) -> C1Message:
    if len(c) != p.length:
        raise DecodingError(f"codeword length {len(c)} != {p.length}", "length")
    x, y2 = tau_encode(c)
    try:
        x_index = engine.rank(engine.s0_spec(p.m), x)
    except ValidationError:
        raise DecodingError(f"first-bit stream is not '0'-{p.m}-dominant", "dominance") from None
    bits: tuple = ()
    w = p.n + 2
    for i in range(p.t):
        block = strip_guards(y2[i * w:(i + 1) * w])
        bits += rll_block_decode(block, p.ell)
    return C1Message(x_index, bits)


def message_from_int(value: int, p: C1Params) -> C1Message:
    """Split an integer below ``x_count * 2^y_bits`` into x index (high part) and y bits."""
    x_index, y = divmod(value, 2 ** p.y_bits)
    return C1Message(x_index, int_to_bits(y, p.y_bits))


def message_to_int(msg: C1Message, p: C1Params) -> int:
    return msg.x_index * 2 ** p.y_bits + bits_to_int(msg.y_bits)


def asymptotic_rate(m: int, ell: int, n: int, n_growth: int = 400) -> float:
    """Rate as t grows: (n-1)/(n+2) + log2 of the growth rate of S0(m, .)."""
    g = engine.growth_rate(engine.s0_spec(m), m, n_growth)
    return (n - 1) / (n + 2) + math.log2(g)


class C1Code:
    """Construction I behind the common codec interface used by the
    channel simulator and the CLI."""

    name = "c1"

    def __init__(self, params: C1Params):
        self.params = params

    @property
    def length(self) -> int:
        return self.params.length

    @property
    def size(self) -> int:
        return self.params.cardinality

    def encode(self, msg: C1Message) -> str:
        return c1_encode(msg, self.params)

    def decode(self, received: str) -> C1Message:
        return c1_decode(received, self.params)

    def messages(self):
        for v in range(self.size):
            yield message_from_int(v, self.params)

    def random_message(self, rng) -> C1Message:
        return message_from_int(rng.randrange(self.size), self.params)

    @property
    def capacity_bits(self) -> int:
        return (self.params.x_count.bit_length() - 1) + self.params.y_bits

    def message_from_int(self, value: int) -> C1Message:
        return message_from_int(value, self.params)

    def message_to_int(self, msg: C1Message) -> int:
        return message_to_int(msg, self.params)
