import random
from fractions import Fraction

import pytest

from dnacodes.channel import (
    EditEvent, EditKind, all_edits, apply_edit, edits_per_word, random_edit, replay, run_campaign,
)
from dnacodes.construction_one import C1Code, C1Params
from dnacodes.constructions import C2Code, C3Code, CLEpsParams, ConcatParams
from dnacodes.errors import ValidationError


@pytest.fixture(scope="module")
def c2():
    return C2Code(ConcatParams(CLEpsParams(4, Fraction(1, 10), 10), 5, 2))


@pytest.fixture(scope="module")
def c3():
    return C3Code(ConcatParams(CLEpsParams(4, Fraction(1, 10), 10), 5, 2))


def test_apply_edit_examples():
    assert apply_edit("ACGT", EditEvent(EditKind.DELETION, 2)) == "AGT"
    assert apply_edit("ACGT", EditEvent(EditKind.INSERTION, 1, "T")) == "TACGT"
    assert apply_edit("ACGT", EditEvent(EditKind.SUBSTITUTION, 4, "A")) == "ACGA"
    assert apply_edit("ACGT", EditEvent(EditKind.INSERTION, 5, "G")) == "ACGTG"


def test_apply_edit_errors():
    with pytest.raises(ValidationError):
        apply_edit("ACGT", EditEvent(EditKind.SUBSTITUTION, 1, "A"))
    with pytest.raises(ValidationError):
        apply_edit("ACGT", EditEvent(EditKind.DELETION, 5))
    with pytest.raises(ValidationError):
        apply_edit("ACGT", EditEvent(EditKind.INSERTION, 1, "X"))


def test_all_edits_count():
    x = "ACGTTA"
    assert len(list(all_edits(x))) == edits_per_word(6, tuple(EditKind)) == 18 + 6 + 28
    assert len(set(all_edits(x))) == 52


def test_event_dict_round_trip():
    rng = random.Random(1)
    for _ in range(50):
        ev = random_edit("ACGTACGT", rng)
        assert EditEvent.from_dict(ev.to_dict()) == ev


def test_none_mode(c2):
    rep = run_campaign(c2, "none", trials=50, seed=3)
    assert rep.successes == rep.trials == 50 and not rep.failures


def test_c1_modes():
    code = C1Code(C1Params(3, 4, 11, 3))
    assert run_campaign(code, "none", trials=100, seed=1).successes == 100
    with pytest.raises(ValidationError):
        run_campaign(code, "sub")


def test_c3_edit_campaign(c3):
    rep = run_campaign(c3, "edit", trials=500, seed=11)
    assert rep.successes == 500 and not rep.failures


def test_c3_exhaustive_campaign(c3):
    rep = run_campaign(c3, "exhaustive")
    assert rep.trials == c3.size * edits_per_word(c3.length, tuple(EditKind))
    assert not rep.failures


def test_exhaustive_cap(c2):
    with pytest.raises(ValidationError):
        run_campaign(c2, "exhaustive", cap=1000)


def test_determinism(c2):
    a = run_campaign(c2, "sub", trials=100, seed=42).to_dict()
    b = run_campaign(c2, "sub", trials=100, seed=42).to_dict()
    assert a == b
    assert a != run_campaign(c2, "sub", trials=100, seed=43).to_dict()


class _Flaky:
    """Wraps a codec and garbles decoding for messages with an odd first symbol."""

    def __init__(self, base):
        self.base = base
        self.name = "c2"
        self.size = base.size
        self.length = base.length

    def encode(self, msg):
        return self.base.encode(msg)

    def decode(self, received):
        msg = self.base.decode(received)
        return (msg[0] + 1,) + msg[1:] if msg[0] % 2 else msg

    def random_message(self, rng):
        return self.base.random_message(rng)


def test_failures_replay(c2):
    code = _Flaky(c2)
    rep = run_campaign(code, "sub", trials=60, seed=5)
    assert rep.failures
    for f in rep.failures:
        assert replay(code, f.seed, f.event) == f.diagnosis
