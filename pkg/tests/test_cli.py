import json

import pytest

from trapezoid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "aaababa")
    assert code == 0
    assert "trapezoidal  True" in out
    assert "H=3 K=4 L=4 R=3" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "aabbaa", "--json")
    assert code == 0
    assert json.loads(out)["closedness"] == "closed"


@pytest.mark.parametrize("argv", [["classify", "abc"], ["classify", ""], ["profile", "abc"]])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_profile_json(capsys):
    code, out, _ = run(capsys, "profile", "aaababa", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["counts"] == [1, 2, 3, 4, 4, 3, 2, 1, 0]
    assert (d["m"], d["M"]) == (3, 4)


def test_profile_ascii(capsys):
    code, out, _ = run(capsys, "profile", "aaababa", "--ascii-graph")
    assert code == 0
    assert out.splitlines()[0].startswith("  4 |")


def test_profile_text(capsys):
    code, out, _ = run(capsys, "profile", "aabbb")
    assert code == 0
    assert "n=0   left={ε} right={ε}" in out


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "aaababa")
    assert code == 0
    assert out.splitlines()[0] == "aaa | baba"
    code, out, _ = run(capsys, "factorize", "aaababa", "--json")
    d = json.loads(out)
    assert (d["p"], d["q"], d["z_f_rev"], d["z_g"]) == ("aaa", "baba", "a", "ba")
    assert d["pair"]["f"] == "aaa" and d["pair"]["g"] == "bab"


def test_factorize_sturmian_is_input_error(capsys):
    code, _, _ = run(capsys, "factorize", "aabaa")
    assert code == 2


def test_census_formats(capsys):
    code, out, _ = run(capsys, "census", "--max", "3", "--csv")
    assert code == 0 and out.splitlines()[1].startswith("length,total_binary")
    code, out, _ = run(capsys, "census", "--max", "3", "--json")
    assert json.loads(out)["rows"][2]["sturmian"] == 8
    code, out, _ = run(capsys, "census", "--max", "3")
    assert code == 0 and out.startswith("#")


def test_census_over_budget(capsys):
    code, _, _ = run(capsys, "census", "--max", "30")
    assert code == 2


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--max", "6", "--only", "prop4_equiv,thm2_pal")
    assert code == 0
    assert out.count(" ok") == 2


def test_verify_unknown_statement(capsys):
    code, _, _ = run(capsys, "verify", "--max", "3", "--only", "nope")
    assert code == 2


def test_verify_violation_exits_1(capsys, monkeypatch):
    from trapezoid import lab
    monkeypatch.setitem(lab.STATEMENTS, "thm2_pal", ("broken", lambda x: False))
    code, out, _ = run(capsys, "verify", "--max", "3", "--only", "thm2_pal")
    assert code == 1
    assert "witness: a" in out


def test_explore(capsys):
    code, out, _ = run(capsys, "explore-open-sturmian", "--max", "6", "--csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "word,H,K,L,R,pi,LRP,longest_right_special"
    assert any(line.startswith("aaabaa,") for line in lines)


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census"])
    assert exc.value.code == 2
