"""Prime-field Hamming codes and quaternary Varshamov-Tenengolts classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DecodingError, ValidationError


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def largest_prime_at_most(x: int) -> int:
    for q in range(x, 1, -1):
        if is_prime(q):
            return q
    raise ValidationError(f"no prime <= {x}")


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValidationError(f"field size {self.q} is not prime")

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.q)


def solve_mod(rows: list[list[int]], rhs: list[int], q: int) -> list[int] | None:
    """Solve ``rows @ v = rhs`` over GF(q) by Gaussian elimination.

    Returns the unique solution, or None when the system is inconsistent
    or underdetermined.
    """
    n_vars = len(rows[0]) if rows else 0
    aug = [[v % q for v in row] + [b % q] for row, b in zip(rows, rhs)]
    pivot_row = 0
    for col in range(n_vars):
        piv = next((r for r in range(pivot_row, len(aug)) if aug[r][col]), None)
        if piv is None:
            return None
        aug[pivot_row], aug[piv] = aug[piv], aug[pivot_row]
        inv = pow(aug[pivot_row][col], -1, q)
        aug[pivot_row] = [v * inv % q for v in aug[pivot_row]]
        for r in range(len(aug)):
            if r != pivot_row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % q for a, b in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
    if any(row[-1] for row in aug[pivot_row:]):
        return None
    return [aug[i][-1] for i in range(n_vars)]


@dataclass(frozen=True)
class HammingCode:
    """The [t, t-r, 3] Hamming code over GF(q), q prime.

    Parity-check columns are the projective points of GF(q)^r, each written
    with its first nonzero entry equal to 1, in lexicographic order.  The
    unit-vector columns hold the parity symbols; the remaining t-r
    positions carry the message in order.
    """

    q: int
    r: int
    H: tuple = field(init=False, repr=False, compare=False)
    parity_positions: tuple = field(init=False, repr=False, compare=False)
    message_positions: tuple = field(init=False, repr=False, compare=False)
    _column_pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        PrimeField(self.q)
        if self.r < 2:
            raise ValidationError("Hamming codes need r >= 2")
        cols = []
        for v in itertools.product(range(self.q), repeat=self.r):
            nz = next((x for x in v if x), 0)
            if nz == 1:
                cols.append(v)
        H = tuple(tuple(col[j] for col in cols) for j in range(self.r))
        units = {tuple(1 if k == j else 0 for k in range(self.r)): j for j in range(self.r)}
        parity = [0] * self.r
        message = []
        for pos, col in enumerate(cols):
            if col in units:
                parity[units[col]] = pos
            else:
                message.append(pos)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "parity_positions", tuple(parity))
        object.__setattr__(self, "message_positions", tuple(message))
        object.__setattr__(self, "_column_pos", {col: pos for pos, col in enumerate(cols)})

    @property
    def t(self) -> int:
        return (self.q ** self.r - 1) // (self.q - 1)

    @property
    def k(self) -> int:
        return self.t - self.r

    def column(self, pos: int) -> tuple:
        return tuple(row[pos] for row in self.H)

    def syndrome(self, word: Sequence[int]) -> tuple:
        q = self.q
        return tuple(sum(h * w for h, w in zip(row, word)) % q for row in self.H)

    def encode(self, msg: Sequence[int]) -> tuple:
        if len(msg) != self.k:
            raise ValidationError(f"message length {len(msg)} != {self.k}")
        if any(not 0 <= v < self.q for v in msg):
            raise ValidationError(f"message symbols must lie in 0..{self.q - 1}")
        word = [0] * self.t
        for pos, v in zip(self.message_positions, msg):
            word[pos] = v
        # parity row j has a single 1 at parity_positions[j]
        for j, row in enumerate(self.H):
            s = sum(row[p] * word[p] for p in self.message_positions)
            word[self.parity_positions[j]] = (-s) % self.q
        return tuple(word)

    def extract(self, word: Sequence[int]) -> tuple:
        return tuple(word[p] for p in self.message_positions)

    def decode(self, received: Sequence[int], erasures: Iterable[int] = ()) -> tuple:
        """Correct one substitution, or fill up to two erasures.

        Erased positions may hold any value (they are ignored).  Mixed
        erasure+substitution patterns are outside the decoding radius.
        """
        if len(received) != self.t:
            raise ValidationError(f"received length {len(received)} != {self.t}")
        q = self.q
        erasures = sorted(set(erasures))
        word = [v % q for v in received]
        if erasures:
            if len(erasures) > 2:
                raise DecodingError("more than two erasures", "erasures")
            known = [0 if i in erasures else v for i, v in enumerate(word)]
            s = self.syndrome(known)
            rows = [[row[e] for e in erasures] for row in self.H]
            sol = solve_mod(rows, [-v for v in s], q)
            if sol is None:
                raise DecodingError("erasure system is inconsistent", "hamming-erasure")
            for e, v in zip(erasures, sol):
                known[e] = v
            return self.extract(known)
        s = self.syndrome(word)
        if not any(s):
            return self.extract(word)
        lead = next(v for v in s if v)
        norm = tuple(v * pow(lead, -1, q) % q for v in s)
        pos = self._column_pos.get(norm)
        if pos is not None:
            word[pos] = (word[pos] - lead) % q
            return self.extract(word)
        raise DecodingError("syndrome matches no single-symbol error", "hamming")

    def codewords(self):
        for msg in itertools.product(range(self.q), repeat=self.k):
            yield msg, self.encode(msg)


def hamming_encode(msg: Sequence[int], code: HammingCode) -> tuple:
    return code.encode(msg)


def hamming_decode(received: Sequence[int], code: HammingCode, erasures: Iterable[int] = ()) -> tuple:
    return code.decode(received, erasures)


# -- q-ary VT machinery (q = 4) ---------------------------------------------

Q = 4


@dataclass(frozen=True)
class VtClass:
    N: int
    a: int
    b: int

    def __post_init__(self):
        if self.N < 1 or not 0 <= self.a < self.N or not 0 <= self.b < Q:
            raise ValidationError(f"invalid VT class {self}")

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == self.N and vt_syndromes(x, self.N) == (self.a, self.b)


def signature(x: Sequence[int]) -> tuple:
    """alpha_i = 1 if x_{i+1} >= x_i else 0."""
    return tuple(1 if x[i + 1] >= x[i] else 0 for i in range(len(x) - 1))


def vt_syndrome(bits: Sequence[int]) -> int:
    """Sum of i * bit_i with 1-based positions."""
    return sum(i * b for i, b in enumerate(bits, start=1))


def vt_syndromes(x: Sequence[int], N: int | None = None) -> tuple[int, int]:
    if N is None:
        N = len(x)
    return vt_syndrome(signature(x)) % N, sum(x) % Q


def _binary_vt_insert(bits: Sequence[int], a: int, mod: int) -> tuple:
    """Undo one deletion in a binary VT word (syndrome a modulo ``mod``)."""
    w = sum(bits)
    d = (a - vt_syndrome(bits)) % mod
    bits = list(bits)
    if d <= w:
        # a 0 was deleted; it had d ones to its right
        ones_right = 0
        pos = len(bits)
        while ones_right < d:
            pos -= 1
            ones_right += bits[pos]
        return tuple(bits[:pos] + [0] + bits[pos:])
    # a 1 was deleted; it had d - w - 1 zeros to its left
    target = d - w - 1
    if target > len(bits) - w:
        raise DecodingError("binary VT deletion decoding found no position", "vt")
    zeros_left = 0
    pos = 0
    while zeros_left < target:
        zeros_left += 1 - bits[pos]
        pos += 1
    return tuple(bits[:pos] + [1] + bits[pos:])


def _binary_vt_delete(bits: Sequence[int], a: int, mod: int) -> tuple:
    """Undo one insertion in a binary VT word (syndrome a modulo ``mod``)."""
    w = sum(bits)
    s = (vt_syndrome(bits) - a) % mod
    bits = list(bits)
    if s == 0:
        return tuple(bits[:-1])
    if s == w:
        return tuple(bits[1:])
    if s < w:
        # an inserted 0 with s ones to its right
        ones_right = 0
        for pos in range(len(bits) - 1, -1, -1):
            if bits[pos] == 0 and ones_right == s:
                return tuple(bits[:pos] + bits[pos + 1:])
            ones_right += bits[pos]
    else:
        # an inserted 1 with s - w zeros to its left
        zeros_left = 0
        for pos, b in enumerate(bits):
            if b == 1 and zeros_left == s - w:
                return tuple(bits[:pos] + bits[pos + 1:])
            zeros_left += 1 - b
    raise DecodingError("binary VT insertion decoding found no position", "vt")


def vt_decode_insdel(received: Sequence[int], cls: VtClass) -> tuple:
    """Recover the member of ``cls`` one insertion or deletion away.

    The symbol sum pins down the lost (or extra) value; the signature of
    the received word is the codeword's signature with one bit deleted (or
    inserted), which binary VT decoding modulo N repairs.  The value is
    then placed (or removed) wherever the signature comes out right.
    """
    received = tuple(received)
    N = cls.N
    if any(v not in (0, 1, 2, 3) for v in received):
        raise ValidationError("received word must be over Z4")
    if len(received) == N - 1:
        v = (cls.b - sum(received)) % Q
        alpha = _binary_vt_insert(signature(received), cls.a, N)
        for j in range(N):
            cand = received[:j] + (v,) + received[j:]
            if signature(cand) == alpha and cls.contains(cand):
                return cand
        raise DecodingError("no insertion point reproduces the signature", "vt")
    if len(received) == N + 1:
        v = (sum(received) - cls.b) % Q
        alpha = _binary_vt_delete(signature(received), cls.a, N)
        for j in range(N + 1):
            if received[j] != v:
                continue
            cand = received[:j] + received[j + 1:]
            if signature(cand) == alpha and cls.contains(cand):
                return cand
        raise DecodingError("no deletion point reproduces the signature", "vt")
    raise ValidationError(f"received length {len(received)} is not N-1 or N+1 (N={N})")
