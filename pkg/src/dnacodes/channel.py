"""Single-edit channel and encode -> corrupt -> decode campaigns."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Iterator

from .alphabet import NUCLEOTIDES, check_dna
from .errors import DecodingError, DnaCodeError, ValidationError

RNG_NAME = "MT19937 (Python random.Random)"


class EditKind(str, Enum):
    SUBSTITUTION = "sub"
    INSERTION = "ins"
    DELETION = "del"


@dataclass(frozen=True, order=True)
class EditEvent:
    """One edit.  Positions are 1-based; an insertion at position p puts the
    new symbol before the current p-th symbol (p = n+1 appends)."""

    kind: EditKind
    position: int
    symbol: str = ""

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "position": self.position}
        if self.symbol:
            out["symbol"] = self.symbol
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "EditEvent":
        return cls(EditKind(d["kind"]), int(d["position"]), d.get("symbol", ""))


def apply_edit(x: str, e: EditEvent) -> str:
    check_dna(x)
    n = len(x)
    p = e.position
    if e.kind is EditKind.DELETION:
        if not 1 <= p <= n:
            raise ValidationError(f"deletion position {p} outside 1..{n}")
        return x[:p - 1] + x[p:]
    if e.symbol not in tuple(NUCLEOTIDES):
        raise ValidationError(f"edit symbol {e.symbol!r} is not a nucleotide")
    if e.kind is EditKind.INSERTION:
        if not 1 <= p <= n + 1:
            raise ValidationError(f"insertion position {p} outside 1..{n + 1}")
        return x[:p - 1] + e.symbol + x[p - 1:]
    if not 1 <= p <= n:
        raise ValidationError(f"substitution position {p} outside 1..{n}")
    if x[p - 1] == e.symbol:
        raise ValidationError("substitution must change the symbol")
    return x[:p - 1] + e.symbol + x[p:]


def all_edits(x: str, kinds=tuple(EditKind)) -> Iterator[EditEvent]:
    n = len(x)
    if EditKind.SUBSTITUTION in kinds:
        for p in range(1, n + 1):
            for s in NUCLEOTIDES:
                if s != x[p - 1]:
                    yield EditEvent(EditKind.SUBSTITUTION, p, s)
    if EditKind.DELETION in kinds:
        for p in range(1, n + 1):
            yield EditEvent(EditKind.DELETION, p)
    if EditKind.INSERTION in kinds:
        for p in range(1, n + 2):
            for s in NUCLEOTIDES:
                yield EditEvent(EditKind.INSERTION, p, s)


def edits_per_word(n: int, kinds) -> int:
    return ((3 * n if EditKind.SUBSTITUTION in kinds else 0)
            + (n if EditKind.DELETION in kinds else 0)
            + (4 * (n + 1) if EditKind.INSERTION in kinds else 0))


def random_edit(x: str, rng: random.Random, kinds=tuple(EditKind)) -> EditEvent:
    kind = kinds[rng.randrange(len(kinds))]
    n = len(x)
    if kind is EditKind.DELETION:
        return EditEvent(kind, rng.randrange(n) + 1)
    if kind is EditKind.INSERTION:
        return EditEvent(kind, rng.randrange(n + 1) + 1, NUCLEOTIDES[rng.randrange(4)])
    p = rng.randrange(n) + 1
    choices = [s for s in NUCLEOTIDES if s != x[p - 1]]
    return EditEvent(kind, p, choices[rng.randrange(3)])


@dataclass(frozen=True, order=True)
class Failure:
    seed: int
    event: EditEvent | None
    diagnosis: str

    def to_dict(self) -> dict:
        return {"seed": self.seed,
                "event": self.event.to_dict() if self.event else None,
                "diagnosis": self.diagnosis}


@dataclass
class TrialReport:
    codec: str
    error_mode: str
    seed: int
    trials: int = 0
    successes: int = 0
    failures: list = field(default_factory=list)
    rng: str = RNG_NAME

    def to_dict(self) -> dict:
        return {
            "codec": self.codec, "error_mode": self.error_mode, "seed": self.seed,
            "rng": self.rng, "trials": self.trials, "successes": self.successes,
            "failures": [f.to_dict() for f in sorted(self.failures)],
        }


MODES = {
    "c1": ("none",),
    "c2": ("none", "sub", "exhaustive"),
    "c3": ("none", "sub", "edit", "exhaustive"),
    "c4": ("none", "sub", "edit", "exhaustive"),
}


def _kinds(codec_name: str, mode: str) -> tuple:
    if mode == "none":
        return ()
    if mode == "sub" or (mode == "exhaustive" and codec_name == "c2"):
        return (EditKind.SUBSTITUTION,)
    return tuple(EditKind)


def trial_seed(seed: int, i: int) -> int:
    return (seed << 32) | i


def _check(codec, msg, event: EditEvent | None) -> str | None:
    """None on success, else a diagnosis string."""
    word = codec.encode(msg)
    received = apply_edit(word, event) if event else word
    try:
        got = codec.decode(received)
    except DnaCodeError as exc:
        tag = getattr(exc, "constraint", type(exc).__name__)
        return f"{tag}: {exc}"
    return None if got == msg else "decoded to a different message"


def replay(codec, seed: int, event: EditEvent | None) -> str | None:
    """Re-run one random-mode trial from its recorded seed and event."""
    return _check(codec, codec.random_message(random.Random(seed)), event)


def run_campaign(codec, error_mode: str, trials: int = 1000, seed: int = 0,
                 cap: int = 10 ** 7) -> TrialReport:
    name = codec.name
    if error_mode not in MODES.get(name, ()):
        raise ValidationError(f"error mode {error_mode!r} not supported by {name}")
    kinds = _kinds(name, error_mode)
    report = TrialReport(name, error_mode, seed)
    if error_mode == "exhaustive":
        needed = codec.size * edits_per_word(codec.length, kinds)
        if needed > cap:
            raise ValidationError(f"exhaustive campaign needs {needed} trials; cap is {cap}")
        for idx, msg in enumerate(codec.messages()):
            word = codec.encode(msg)
            for ev in all_edits(word, kinds):
                report.trials += 1
                diag = _check(codec, msg, ev)
                if diag is None:
                    report.successes += 1
                else:
                    report.failures.append(Failure(idx, ev, diag))
        return report
    for i in range(trials):
        ts = trial_seed(seed, i)
        rng = random.Random(ts)
        msg = codec.random_message(rng)
        ev = random_edit(codec.encode(msg), rng, kinds) if kinds else None
        report.trials += 1
        diag = _check(codec, msg, ev)
        if diag is None:
            report.successes += 1
        else:
            report.failures.append(Failure(ts, ev, diag))
    return report
