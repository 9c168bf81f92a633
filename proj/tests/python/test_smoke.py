import pytest

import elemtab


def test_fixtures_listed():
    names = elemtab.fixture_names()
    assert "heat1d" in names and "art355" in names


def test_heat1d_report():
    rep = elemtab.analyze(elemtab.fixture("heat1d"))
    assert (rep["ell"], rep["L"], rep["nu"], rep["n"]) == (1, 1, 2, 2)
    assert [s["dim"] for s in rep["flag"]] == [2, 1, 0]
    assert elemtab.char_ideal(elemtab.fixture("heat1d")) == ["x2^2"]


def test_involutivity_verdicts():
    good = elemtab.involutivity(elemtab.fixture("heat2d"))
    assert good["consistent"] and good["involutive"]
    bad = elemtab.involutivity(elemtab.fixture("crossed"))
    assert bad["consistent"] and not bad["involutive"]


def test_spec_round_trip():
    t = elemtab.random_involutive(4)
    back = elemtab.from_spec(t.to_spec())
    assert back.characters == t.characters
    assert elemtab.analyze(back) == elemtab.analyze(t)


def test_errors_carry_kind_and_position():
    with pytest.raises(elemtab.Error) as bad_value:
        elemtab.from_spec('{"format_version": "1", "n": 2, "r": 1, "generators": [[["1/0", "1"]]]}')
    assert bad_value.value.kind == "ValueError"
    with pytest.raises(elemtab.Error) as bad_text:
        elemtab.from_spec('{\n  "n": 2,,\n}')
    assert bad_text.value.kind == "ParseError" and bad_text.value.line == 2
    with pytest.raises(elemtab.Error) as capped:
        elemtab.analyze(elemtab.fixture("heat2d"), max_minors=1)
    assert capped.value.kind == "MinorExplosion"
