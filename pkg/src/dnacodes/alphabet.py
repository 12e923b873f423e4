"""Sequence types and the basic maps between DNA, binary and Z4.

DNA sequences are plain ``str`` over ``ATCG``; binary and quaternary
sequences are tuples of ints.  Both are immutable, so every function
here returns a fresh value.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ValidationError

NUCLEOTIDES = "ATCG"
COMPLEMENT = {"A": "T", "T": "A", "C": "G", "G": "C"}

# tau: T=00, C=01, A=10, G=11
TAU = {"T": (0, 0), "C": (0, 1), "A": (1, 0), "G": (1, 1)}
TAU_INV = {bits: nt for nt, bits in TAU.items()}

Z4 = {"A": 0, "T": 1, "C": 2, "G": 3}
Z4_INV = "ATCG"

_RC_TABLE = str.maketrans("ATCG", "TAGC")

BitSeq = tuple
QuatSeq = tuple


def check_dna(x: str) -> str:
    """Return ``x`` unchanged, raising if it contains a non-ATCG symbol."""
    if not isinstance(x, str):
        raise ValidationError(f"DNA sequence must be a str, got {type(x).__name__}")
    bad = set(x) - set(NUCLEOTIDES)
    if bad:
        raise ValidationError(f"invalid nucleotide(s) {sorted(bad)} in DNA sequence")
    return x


def check_bits(bits: Iterable[int]) -> BitSeq:
    out = tuple(bits)
    if any(b not in (0, 1) for b in out):
        raise ValidationError("binary sequence may only contain 0 and 1")
    return out


def tau_encode(x: str) -> tuple[BitSeq, BitSeq]:
    """Split a DNA sequence into its first-bit and second-bit streams."""
    check_dna(x)
    first = tuple(TAU[nt][0] for nt in x)
    second = tuple(TAU[nt][1] for nt in x)
    return first, second


def tau_decode(x: Sequence[int], y: Sequence[int]) -> str:
    """Inverse of :func:`tau_encode`: position i becomes tau^-1(x_i y_i)."""
    if len(x) != len(y):
        raise ValidationError(f"bit streams differ in length ({len(x)} != {len(y)})")
    try:
        return "".join(TAU_INV[(a, b)] for a, b in zip(x, y))
    except KeyError:
        raise ValidationError("bit streams may only contain 0 and 1") from None


def interleave(x: Sequence[int], y: Sequence[int]) -> BitSeq:
    """Flatten two equal-length streams to ``x1 y1 x2 y2 ...``."""
    if len(x) != len(y):
        raise ValidationError("bit streams differ in length")
    return tuple(b for pair in zip(x, y) for b in pair)


def deinterleave(z: Sequence[int]) -> tuple[BitSeq, BitSeq]:
    if len(z) % 2:
        raise ValidationError("interleaved stream must have even length")
    return tuple(z[0::2]), tuple(z[1::2])


def reverse_complement(x: str) -> str:
    return check_dna(x).translate(_RC_TABLE)[::-1]


def gc_weight(x: str) -> int:
    return x.count("G") + x.count("C")


def dna_to_z4(x: str) -> QuatSeq:
    """A->0, T->1, C->2, G->3."""
    check_dna(x)
    return tuple(Z4[nt] for nt in x)


def z4_to_dna(q: Sequence[int]) -> str:
    for d in q:
        if d not in (0, 1, 2, 3):
            raise ValidationError(f"quaternary digit {d!r} outside 0..3")
    return "".join(Z4_INV[d] for d in q)


def hamming_weight(bits: Sequence[int]) -> int:
    return sum(bits)


def hamming_distance(a: Sequence, b: Sequence) -> int:
    if len(a) != len(b):
        raise ValidationError("Hamming distance needs equal lengths")
    return sum(1 for u, v in zip(a, b) if u != v)


# -- conversions between integers and bit tuples (MSB first) ---------------

def int_to_bits(value: int, width: int) -> BitSeq:
    if value < 0 or value >> width:
        raise ValidationError(f"{value} does not fit in {width} bits")
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def bits_to_int(bits: Sequence[int]) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


def pack_bits(bits: Sequence[int]) -> bytes:
    """Binary form of a bit sequence: 8-byte big-endian bit length, then
    the bits MSB-first with the final partial byte zero-padded."""
    bits = check_bits(bits)
    out = bytearray(len(bits).to_bytes(8, "big"))
    for i in range(0, len(bits), 8):
        chunk = bits[i:i + 8]
        out.append(bits_to_int(chunk) << (8 - len(chunk)))
    return bytes(out)


def unpack_bits(data: bytes) -> BitSeq:
    if len(data) < 8:
        raise ValidationError("packed bit stream is missing its length header")
    n = int.from_bytes(data[:8], "big")
    body = data[8:]
    if len(body) != (n + 7) // 8:
        raise ValidationError(f"packed bit stream has {len(body)} bytes, header says {n} bits")
    bits = [(byte >> (7 - k)) & 1 for byte in body for k in range(8)]
    return tuple(bits[:n])


def bytes_to_bits(data: bytes) -> BitSeq:
    return tuple((byte >> (7 - k)) & 1 for byte in data for k in range(8))


def bits_to_bytes(bits: Sequence[int]) -> bytes:
    if len(bits) % 8:
        raise ValidationError("bit count is not a multiple of 8")
    return bytes(bits_to_int(bits[i:i + 8]) for i in range(0, len(bits), 8))
