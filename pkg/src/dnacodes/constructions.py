"""3-SSA, run-length-limited, GC-balanced codes with single-error correction.

Layers, innermost first:

* ``C_{ell,eps}`` - length-n words tau^-1(c || y) with c in f(ell, n) and y
  an eps-balanced word carrying n-1 data bits.
* extending step - wrap each word in TC/CT guard digrams (length n+4).
* Construction II - Hamming code over GF(q) whose symbols are mapped to
  extended words by an injective map ``pi``; corrects one substitution.
* Construction III - the largest quaternary VT class inside Construction II;
  corrects one insertion, deletion or substitution.
* Construction IV - t-fold concatenation of a Construction II code, which is
  GC-locally balanced, followed by the same VT class selection.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import engine
from .alphabet import bits_to_int, dna_to_z4, int_to_bits, tau_decode, tau_encode, z4_to_dna
from .ecc import HammingCode, VtClass, is_prime, vt_decode_insdel, vt_syndromes
from .errors import DecodingError, ValidationError
from .oracles import as_fraction

DEFAULT_CAP = 10 ** 6


# -- C_{ell,eps} ---------------------------------------------------------------

@dataclass(frozen=True)
class CLEpsParams:
    ell: int
    eps: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if self.ell < 3:
            raise ValidationError(f"ell must be >= 3, got {self.ell}")
        if not 0 < self.eps < Fraction(1, 2):
            raise ValidationError(f"eps must lie in (0, 0.5), got {self.eps}")
        if self.n < 3:
            raise ValidationError("n must be >= 3")
        if self.balanced_count < 2 ** (self.n - 1):
            raise ValidationError(
                f"only {self.balanced_count} eps-balanced words of length {self.n}; "
                f"need {2 ** (self.n - 1)} for a one-redundant-bit balance encoder")

    @property
    def balanced(self) -> engine.ConstraintSpec:
        return engine.balanced_spec(self.n, self.eps)

    @property
    def balanced_count(self) -> int:
        return engine.count(self.balanced, self.n)

    @property
    def f_count(self) -> int:
        return engine.count(engine.f_spec(self.ell), self.n)

    @property
    def cardinality(self) -> int:
        return 2 ** (self.n - 1) * self.f_count

    @property
    def rate(self) -> float:
        return (self.n - 1) / self.n + math.log2(self.f_count) / self.n

    def length_condition(self) -> bool:
        """The classical sufficient condition n > ln(n) / eps^2 for the
        balance encoder; reported only, the count check above is what
        the code relies on."""
        return self.n > math.log(self.n) / float(self.eps) ** 2


def cl_eps_encode(c_index: int, data: Sequence[int], p: CLEpsParams) -> str:
    if len(data) != p.n - 1:
        raise ValidationError(f"need {p.n - 1} data bits, got {len(data)}")
    c = engine.unrank(engine.f_spec(p.ell), p.n, c_index)
    y = engine.unrank(p.balanced, p.n, bits_to_int(data))
    return tau_decode(c, y)


def cl_eps_decode(word: str, p: CLEpsParams) -> tuple[int, tuple]:
    if len(word) != p.n:
        raise DecodingError(f"inner word length {len(word)} != {p.n}", "length")
    c, y = tau_encode(word)
    try:
        c_index = engine.rank(engine.f_spec(p.ell), c)
    except ValidationError:
        raise DecodingError("first-bit stream not in f(ell, n)", "dominance-rll") from None
    try:
        d = engine.rank(p.balanced, y)
    except ValidationError:
        raise DecodingError("second-bit stream not eps-balanced", "gc-balance") from None
    if d >= 2 ** (p.n - 1):
        raise DecodingError("balanced word outside the encoder image", "gc-image")
    return c_index, int_to_bits(d, p.n - 1)


# -- extending step ------------------------------------------------------------

def guard_prefix(y: str) -> str:
    return "CT" if y[0] == "C" else "TC"


def guard_suffix(y: str) -> str:
    return "CT" if y[-1] == "T" else "TC"


def extend(y: str) -> str:
    if not y:
        raise ValidationError("cannot extend an empty word")
    return guard_prefix(y) + y + guard_suffix(y)


def unextend(block: str) -> str:
    if len(block) < 5:
        raise DecodingError("block too short to carry guards", "guard")
    y = block[2:-2]
    if block[:2] != guard_prefix(y) or block[-2:] != guard_suffix(y):
        raise DecodingError("guard digrams do not match the extending rule", "guard")
    return y


# -- Construction II -----------------------------------------------------------

@dataclass(frozen=True)
class ConcatParams:
    inner: CLEpsParams
    q: int
    r: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValidationError(f"q={self.q} must be prime")
        if self.r < 2:
            raise ValidationError("r must be >= 2")
        if self.q > self.S_size:
            raise ValidationError(f"q={self.q} exceeds |S|={self.S_size}")

    @property
    def S_size(self) -> int:
        return self.inner.cardinality

    @property
    def hamming(self) -> HammingCode:
        return _hamming(self.q, self.r)

    @property
    def t(self) -> int:
        return (self.q ** self.r - 1) // (self.q - 1)

    @property
    def k(self) -> int:
        return self.t - self.r

    @property
    def block_length(self) -> int:
        return self.inner.n + 4

    @property
    def N(self) -> int:
        return self.block_length * self.t

    @property
    def cardinality(self) -> int:
        return self.q ** self.k

    @property
    def rate(self) -> float:
        return self.t / self.N * (1 - self.r / self.t) * math.log2(self.q)

    @property
    def eps_effective(self) -> Fraction:
        """Balance of every extended block: each guard digram is half GC."""
        n = self.inner.n
        return self.inner.eps * n / (n + 4)


@lru_cache(maxsize=None)
def _hamming(q: int, r: int) -> HammingCode:
    return HammingCode(q, r)


def pi(element: int, p: ConcatParams) -> str:
    """Injective map from GF(q) into the extended set S."""
    if not 0 <= element < p.q:
        raise ValidationError(f"field element {element} outside 0..{p.q - 1}")
    c_index, data = divmod(element, 2 ** (p.inner.n - 1))
    return extend(cl_eps_encode(c_index, int_to_bits(data, p.inner.n - 1), p.inner))


def pi_inverse(block: str, p: ConcatParams) -> int:
    result = _pi_lookup(block, p)
    if isinstance(result, DecodingError):
        raise DecodingError(str(result), result.constraint)
    return result


@lru_cache(maxsize=1 << 16)
def _pi_lookup(block: str, p: ConcatParams):
    # failures are cached as exception objects; lru_cache skips raised ones
    try:
        y = unextend(block)
        c_index, data = cl_eps_decode(y, p.inner)
    except DecodingError as exc:
        return exc
    e = c_index * 2 ** (p.inner.n - 1) + bits_to_int(data)
    if e >= p.q:
        return DecodingError(f"block maps to {e}, outside GF({p.q})", "pi-image")
    return e


def c2_encode(msg: Sequence[int], p: ConcatParams) -> str:
    return "".join(pi(c, p) for c in p.hamming.encode(tuple(msg)))


def c2_decode(received: str, p: ConcatParams) -> tuple:
    """Decode with at most one DNA substitution.

    Each block either inverts through ``pi`` or is flagged.  One flagged
    block is an erasure for the Hamming code; with none flagged a
    substitution may still have moved a block onto another image of
    ``pi``, which ordinary Hamming decoding fixes.
    """
    if len(received) != p.N:
        raise DecodingError(f"received length {len(received)} != {p.N}", "length")
    w = p.block_length
    symbols = []
    flagged = []
    for i in range(p.t):
        try:
            symbols.append(pi_inverse(received[i * w:(i + 1) * w], p))
        except DecodingError:
            symbols.append(0)
            flagged.append(i)
    if len(flagged) > 1:
        raise DecodingError(f"{len(flagged)} blocks are not in S", "multiple-blocks")
    return p.hamming.decode(symbols, erasures=flagged)


class C2Code:
    name = "c2"

    def __init__(self, params: ConcatParams):
        self.params = params

    @property
    def length(self) -> int:
        return self.params.N

    def encode(self, msg) -> str:
        return c2_encode(msg, self.params)

    def decode(self, received: str):
        return c2_decode(received, self.params)

    def messages(self) -> Iterable[tuple]:
        return itertools.product(range(self.params.q), repeat=self.params.k)

    @property
    def size(self) -> int:
        return self.params.cardinality

    def random_message(self, rng: random.Random) -> tuple:
        return tuple(rng.randrange(self.params.q) for _ in range(self.params.k))

    @property
    def capacity_bits(self) -> int:
        return _floor_log2(self.size)

    def message_from_int(self, value: int) -> tuple:
        digits = []
        for _ in range(self.params.k):
            value, d = divmod(value, self.params.q)
            digits.append(d)
        if value:
            raise ValidationError("value too large for one codeword")
        return tuple(reversed(digits))

    def message_to_int(self, msg) -> int:
        value = 0
        for d in msg:
            value = value * self.params.q + d
        return value


def _floor_log2(x: int) -> int:
    return x.bit_length() - 1 if x > 0 else 0


# -- VT class selection ----------------------------------------------------------

@dataclass(frozen=True)
class VtSearchResult:
    cls: VtClass
    subcode: tuple            # member words, lexicographically sorted
    total: int                # number of codewords examined
    exhaustive: bool
    bucket_sizes: dict = field(compare=False, repr=False)

    @property
    def bound(self) -> int:
        """Pigeonhole guarantee ceil(total / (4N))."""
        return -(-self.total // (4 * self.cls.N))

    def to_dict(self) -> dict:
        return {
            "N": self.cls.N, "a0": self.cls.a, "b0": self.cls.b,
            "subcode_size": len(self.subcode), "code_size": self.total,
            "pigeonhole_bound": self.bound, "exhaustive": self.exhaustive,
            "nonempty_classes": len(self.bucket_sizes),
        }


def find_vt_class(code: Iterable[str], exhaustive: bool = True) -> VtSearchResult:
    """Bucket codewords by quaternary VT syndromes and keep the largest bucket.

    Ties go to the smallest ``(a, b)``.  With ``exhaustive=False`` the input
    is a sample and the size bound is only empirical.
    """
    buckets: dict = defaultdict(list)
    N = None
    total = 0
    for word in code:
        if N is None:
            N = len(word)
        elif len(word) != N:
            raise ValidationError("codewords must share one length")
        buckets[vt_syndromes(dna_to_z4(word), N)].append(word)
        total += 1
    if not total:
        raise ValidationError("cannot search an empty code")
    (a, b), members = max(buckets.items(), key=lambda kv: (len(kv[1]), (-kv[0][0], -kv[0][1])))
    return VtSearchResult(VtClass(N, a, b), tuple(sorted(members)), total, exhaustive,
                          {k: len(v) for k, v in buckets.items()})


class _VtSubcode:
    """Shared machinery for Constructions III and IV: a base code, its VT
    class and a sorted list of the messages whose codewords lie in it."""

    base = None

    def _select(self, cap: int, seed: int) -> None:
        size = self.base.size
        if size <= cap:
            pairs = {self.base.encode(m): m for m in self.base.messages()}
            self.search = find_vt_class(pairs, exhaustive=True)
        else:
            rng = random.Random(seed)
            pairs = {}
            for _ in range(cap):
                m = self.base.random_message(rng)
                pairs[self.base.encode(m)] = m
            self.search = find_vt_class(pairs, exhaustive=False)
        self.cls = self.search.cls
        self.members = tuple(sorted(pairs[w] for w in self.search.subcode))
        self._member_set = frozenset(self.members)

    @property
    def length(self) -> int:
        return self.cls.N

    @property
    def size(self) -> int:
        return len(self.members)

    def messages(self):
        return iter(self.members)

    def random_message(self, rng: random.Random):
        return self.members[rng.randrange(len(self.members))]

    def encode(self, msg) -> str:
        if msg not in self._member_set:
            raise ValidationError("message is not in the selected VT subcode")
        return self.base.encode(msg)

    def decode(self, received: str):
        N = self.cls.N
        if len(received) == N:
            msg = self.base.decode(received)
        elif len(received) in (N - 1, N + 1):
            fixed = z4_to_dna(vt_decode_insdel(dna_to_z4(received), self.cls))
            msg = self.base.decode(fixed)
        else:
            raise ValidationError(f"received length {len(received)} is more than one edit from {N}")
        if msg not in self._member_set:
            raise DecodingError("decoded message is not in the VT subcode", "vt-subcode")
        return msg

    @property
    def capacity_bits(self) -> int:
        if not self.search.exhaustive:
            raise ValidationError("VT class found by sampling; the subcode is not known exactly")
        return _floor_log2(self.size)

    def message_from_int(self, value: int):
        return self.members[value]

    def message_to_int(self, msg) -> int:
        return self.members.index(msg)

    def manifest(self) -> dict:
        return self.search.to_dict()


class C3Code(_VtSubcode):
    name = "c3"

    def __init__(self, params: ConcatParams, cap: int = DEFAULT_CAP, seed: int = 0):
        self.params = params
        self.base = C2Code(params)
        self._select(cap, seed)

    @property
    def rate(self) -> float:
        return math.log2(self.size) / self.length if self.size else 0.0


def c3_decode_edit(received: str, code: C3Code) -> tuple:
    """Length N: substitution path; N +- 1: VT repair then clean decoding."""
    return code.decode(received)


# -- Construction IV -------------------------------------------------------------

@dataclass(frozen=True)
class LocalParams:
    s0: int
    t: int
    s: int
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if self.t < 1 or self.s0 < 1:
            raise ValidationError("s0 and t must be positive")
        if not self.t * self.s0 >= self.s > 2 * self.s0:
            raise ValidationError(f"need t*s0 >= s > 2*s0, got s0={self.s0}, t={self.t}, s={self.s}")

    @property
    def delta(self) -> Fraction:
        return Fraction(self.s0 - 1) * (1 - 2 * self.eps) / self.s + self.eps

    @property
    def N(self) -> int:
        return self.t * self.s0


class ConcatenatedCode:
    """All t-tuples of codewords of an inner code, written back to back."""

    def __init__(self, inner: C2Code, t: int):
        self.inner = inner
        self.t = t

    @property
    def size(self) -> int:
        return self.inner.size ** self.t

    @property
    def length(self) -> int:
        return self.inner.length * self.t

    def messages(self):
        return itertools.product(tuple(self.inner.messages()), repeat=self.t)

    def random_message(self, rng: random.Random):
        return tuple(self.inner.random_message(rng) for _ in range(self.t))

    def encode(self, msg) -> str:
        if len(msg) != self.t:
            raise ValidationError(f"need {self.t} inner messages")
        return "".join(self.inner.encode(m) for m in msg)

    def decode(self, received: str):
        w = self.inner.length
        if len(received) != self.length:
            raise DecodingError(f"received length {len(received)} != {self.length}", "length")
        return tuple(self.inner.decode(received[i * w:(i + 1) * w]) for i in range(self.t))


class C4Code(_VtSubcode):
    name = "c4"

    def __init__(self, inner: ConcatParams, local: LocalParams, cap: int = DEFAULT_CAP, seed: int = 0):
        if local.s0 != inner.N:
            raise ValidationError(f"s0={local.s0} must equal the inner code length {inner.N}")
        self.inner = inner
        self.local = local
        self.base = ConcatenatedCode(C2Code(inner), local.t)
        self._select(cap, seed)

    @property
    def delta(self) -> Fraction:
        return self.local.delta


def c4_build_local(inner: ConcatParams, t: int, s: int, cap: int = DEFAULT_CAP, seed: int = 0) -> C4Code:
    local = LocalParams(inner.N, t, s, inner.inner.eps)
    return C4Code(inner, local, cap=cap, seed=seed)
