"""Split a byte payload into per-codeword integers and back.

The payload is prefixed with its byte length (8 bytes, big-endian), turned
into a bit stream and cut into chunks of ``k`` bits; the last chunk is
zero-padded.  Each chunk is read MSB-first as an integer below ``2**k``.
"""

from __future__ import annotations

from .alphabet import bits_to_bytes, bits_to_int, bytes_to_bits, int_to_bits
from .errors import DecodingError, ValidationError


def to_chunks(data: bytes, k: int) -> list[int]:
    if k < 1:
        raise ValidationError("a codeword must carry at least one bit")
    bits = bytes_to_bits(len(data).to_bytes(8, "big") + data)
    pad = (-len(bits)) % k
    bits = bits + (0,) * pad
    return [bits_to_int(bits[i:i + k]) for i in range(0, len(bits), k)]


def from_chunks(values: list[int], k: int) -> bytes:
    bits: list = []
    for v in values:
        bits.extend(int_to_bits(v, k))
    if len(bits) < 64:
        raise DecodingError("too few codewords to hold the length header", "framing")
    n = int.from_bytes(bits_to_bytes(bits[:64]), "big")
    end = 64 + 8 * n
    if end > len(bits):
        raise DecodingError(f"header announces {n} bytes but only {(len(bits) - 64) // 8} decoded",
                            "framing")
    return bits_to_bytes(bits[64:end])
