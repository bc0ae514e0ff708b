import json

import pytest

from multiseg import ParseError, SemanticError, mseg, parse, print_session, seg
from multiseg.cli import run

CORPUS = [
    "{}",
    "{[0]@chr}",
    "{[0,1]@chr}",
    "{[0,1]@chr,[1,1]@chr}",
    "{[1/2,5/2]@chr}",
    "{[-1,0]@chr,[0,1]@chr}",
    "{[0,4]@chr}",
    "{[0,0]@chr,[2,2]@chr}",
    "{[0,0]@chr,[1,1]@chr,[2,2]@chr}",
    "{[0,1]@chr,[2,3]@chr}",
    "{[-1/2,1/2]@chr}",
    "{[0,2]@chr,[1,1]@chr}",
    "{[1,2]@chr,[0,1]@chr,[0,0]@chr}",
    "{[0,1]@chr,[-1,0]@chr,[0,0]@chr,[-1,1]@chr}",
    "line rho size 2; {[0,1]@rho}",
    "line rho size 2; {[0]@rho,[1]@rho}",
    "line a size 1 dual b; line b size 1 dual a; {[0,2]@a}",
    "{[3,4]@chr} {[0,1]@chr}",
    "{[0]@chr,[0]@chr}",
    "{[2,3]@chr,[1,2]@chr}",
]


def test_parse_basic():
    s = parse("line chr size 1; {[0,1]@chr,[1,1]@chr}")
    assert s.multisegments == (mseg(seg(0, 1), seg(1, 1)),)


def test_parse_singleton_sugar_and_halves():
    s = parse("{[1/2,5/2]@chr}")
    (m,) = s.multisegments
    assert list(m)[0].rel_length == 3
    assert parse("{[2]@chr}").multisegments == (mseg(seg(2)),)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("{[0,1]@chr")
    with pytest.raises(ParseError):
        parse("{[0.5]@chr}")  # decimals rejected, fractions only
    with pytest.raises(ParseError):
        parse("")


def test_semantic_errors():
    with pytest.raises(SemanticError):
        parse("{[1,0]@chr}")  # b - a < 0
    with pytest.raises(SemanticError):
        parse("{[0]@rho}")  # undeclared line
    with pytest.raises(SemanticError):
        parse("{[1/3]@chr}")  # bad denominator
    with pytest.raises(SemanticError):
        parse("line a size 1 dual b; {[0]@a}")  # dual never declared
    with pytest.raises(SemanticError):
        parse("line a size 1 dual b; line b size 2 dual a; {[0]@a}")


def test_round_trip_on_corpus():
    for text in CORPUS:
        s = parse(text)
        assert parse(print_session(s)) == s


def exit_code(argv):
    return run(argv)


def test_exit_codes(capsys):
    assert exit_code(["level", "{[0,1]@chr,[1,1]@chr}"]) == 0
    assert exit_code(["level", "{[0,1]@chr"]) == 1
    assert exit_code(["level", "{[1,0]@chr}"]) == 2
    capsys.readouterr()


def test_level_output(capsys):
    assert run(["level", "{[0,1]@chr,[1,1]@chr}"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_classify_projectivity(capsys):
    assert run(["classify", "--what", "projectivity", "{[0,4]@chr}"]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_asymmetry_exit_and_verdict(capsys):
    code = run(["asymmetry", "--order", "1", "--json", "{[0,0]@chr,[1,1]@chr}"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["result"]["verdict"] == "CertifiedDisjoint"
    assert payload["version"] == 1
    assert payload["command"] == "asymmetry"


def test_derive_highest_and_speh(capsys):
    assert run(["derive", "--side", "right", "--order", "2",
                "{[0,1]@chr,[1,1]@chr}"]) == 0
    assert capsys.readouterr().out.strip() == "{[0]@chr}"

    assert run(["derive", "--side", "right", "--order", "1", "--shifted",
                "{[0,0]@chr,[1,1]@chr}"]) == 0
    assert capsys.readouterr().out.strip() == "{[3/2]@chr}"

    # neither the level nor a Speh-exact order: semantic error
    assert run(["derive", "--side", "right", "--order", "1",
                "{[0,0]@chr,[2,2]@chr}"]) == 2
    capsys.readouterr()


def test_candidates_refined(capsys):
    assert run(["candidates", "--side", "right", "--order", "1",
                "{[0,0]@chr,[1,1]@chr}"]) == 0
    assert capsys.readouterr().out.splitlines() == ["{[1]@chr}", "{[0]@chr}"]

    assert run(["candidates", "--side", "right", "--order", "1", "--refined",
                "{[0,0]@chr,[1,1]@chr}"]) == 0
    assert capsys.readouterr().out.splitlines() == ["{[1]@chr}"]


def test_json_byte_stability(capsys):
    outputs = []
    for _ in range(2):
        assert run(["ui-closure", "--json",
                    "{[0,0]@chr,[1,1]@chr,[2,2]@chr}"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0])
    assert payload["input"] == "{[2]@chr,[1]@chr,[0]@chr}"
    assert len(payload["result"]) == 4


def test_multiple_multisegments(capsys):
    assert run(["level", "--json", "{[0,1]@chr} {[0]@chr,[1]@chr}"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"] == [1, 2]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    assert run(["normalize", "--json", "--out", str(target), "{[0,1]@chr}"]) == 0
    capsys.readouterr()
    payload = json.loads(target.read_text())
    assert payload["result"] == "{[0,1]@chr}"
