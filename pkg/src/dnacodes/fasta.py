"""Minimal FASTA / plain-line reader and writer for DNA sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO

from .alphabet import NUCLEOTIDES
from .errors import ValidationError


class FastaParseError(ValidationError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Record:
    name: str
    seq: str
    description: str = ""


def parse(handle: TextIO) -> list[Record]:
    """Read FASTA records, or bare sequences one per line.

    Blank lines are skipped.  A file that never uses ``>`` headers is read
    as one sequence per line with names ``seq1, seq2, ...``.
    """
    records: list[Record] = []
    name = desc = None
    chunks: list[str] = []
    bare = 0
    for lineno, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            if name is not None:
                records.append(Record(name, "".join(chunks), desc))
            header = line[1:].split(maxsplit=1)
            if not header:
                raise FastaParseError("empty FASTA header", lineno)
            name = header[0]
            desc = header[1] if len(header) > 1 else ""
            chunks = []
            continue
        seq = line.upper()
        bad = set(seq) - set(NUCLEOTIDES)
        if bad:
            raise FastaParseError(f"invalid nucleotide(s) {''.join(sorted(bad))!r}", lineno)
        if name is None:
            bare += 1
            records.append(Record(f"seq{bare}", seq))
        else:
            chunks.append(seq)
    if name is not None:
        records.append(Record(name, "".join(chunks), desc))
    return records


def write(handle: TextIO, records: Iterable[Record], width: int = 80) -> None:
    for rec in records:
        header = f">{rec.name}"
        if rec.description:
            header += f" {rec.description}"
        handle.write(header + "\n")
        if not rec.seq:
            handle.write("\n")
        for i in range(0, len(rec.seq), width):
            handle.write(rec.seq[i:i + width] + "\n")
