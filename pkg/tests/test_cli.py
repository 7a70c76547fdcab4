import json

import pytest

from abelsq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_text(capsys):
    code, out, _ = run(capsys, "count", "abaababa")
    assert code == 0
    assert out.splitlines()[0] == "theta=6 trivial=1 nontrivial=5 inequivalent=3"


def test_count_runlength(capsys):
    code, out, _ = run(capsys, "count", "b^5")
    assert code == 0 and out.startswith("theta=2 ")


def test_count_factors_ordering(capsys):
    _, out, _ = run(capsys, "count", "--factors", "abaababa")
    assert out.splitlines()[1:] == ["aa", "abab", "baab", "baba", "aababa", "abaaba"]


def test_count_occurrences(capsys):
    _, out, _ = run(capsys, "count", "--occurrences", "abab")
    assert out.splitlines()[1:] == ["1 2 abab"]


def test_count_circular(capsys):
    code, out, _ = run(capsys, "count", "--circular", "abab")
    assert code == 0
    assert "theta=2" in out and "inequivalent=1" in out


def test_count_json_schema(capsys):
    _, out, _ = run(capsys, "count", "--format", "json", "--factors", "--occurrences", "aabb")
    d = json.loads(out)
    assert set(d) == {"word", "length", "circular", "theta", "trivial", "nontrivial",
                      "inequivalent", "factors", "occurrences"}
    assert d["factors"] == ["aa", "bb"] and d["occurrences"] == [[1, 1], [3, 1]]


@pytest.mark.parametrize("bad", ["a^0", "abc", "a^"])
def test_count_parse_error_exit_2(capsys, bad):
    code, out, err = run(capsys, "count", bad)
    assert code == 2 and out == "" and "error" in err


def test_minimize_text(capsys):
    code, out, _ = run(capsys, "minimize", "-n", "9", "-x", "3")
    assert code == 0
    lines = out.splitlines()
    assert "min_theta=2" in lines[0] and lines[1:] == ["bbbaaabbb"]


def test_minimize_json(capsys):
    code, out, _ = run(capsys, "minimize", "-n", "5", "-x", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["min_theta"] == 1 and d["minimizers"] == ["abbba"]
    assert set(d) == {"schema", "version", "n", "x", "min_theta", "minimizers", "words_examined", "elapsed_ms"}


def test_minimize_table3_middle(capsys):
    _, out, _ = run(capsys, "minimize", "-n", "18", "-x", "9", "--format", "json")
    assert json.loads(out)["min_theta"] == 4


def test_minimize_cache(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    run(capsys, "minimize", "-n", "10", "-x", "3", "--cache", str(path))
    run(capsys, "minimize", "-n", "10", "-x", "3", "--cache", str(path))
    assert len(path.read_text().splitlines()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["minimize", "-n", "4", "-x", "5"],
        ["minimize", "-n", "x", "-x", "1"],
        ["minimize", "-n", "40", "-x", "20"],
        ["minimize", "-n", "6", "-x", "2", "--threads", "0"],
        ["bogus"],
        ["tables", "4"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_tables_diff(capsys):
    code, out, _ = run(capsys, "tables", "1", "--diff")
    assert code == 0
    flagged = [l for l in out.splitlines() if l.startswith(("MISPRINT", "REGRESSION"))]
    assert len(flagged) == 1 and "abbbabb" in flagged[0]


def test_tables_2_rows(capsys):
    code, out, _ = run(capsys, "tables", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0 and [r["n"] for r in d["rows"]] == list(range(5, 18))


def test_tables_regression_exits_1(capsys, monkeypatch):
    from abelsq import tables

    gold = tables.load_golden(3)
    gold["rows"][5]["number"] = 3
    monkeypatch.setattr(tables, "load_golden", lambda which: gold)
    code, out, _ = run(capsys, "tables", "3", "--diff")
    assert code == 1 and "REGRESSION: x=5 number" in out


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "identities")
    assert code == 0 and out.startswith("identities: holds")


def test_verify_two_a(capsys):
    code, out, _ = run(capsys, "verify", "two_a", "--bounds", "6", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["checked"] == 343 and d["mismatches"] == []


def test_verify_fici_saarela_json(capsys):
    code, out, _ = run(capsys, "verify", "fici_saarela", "--nmax", "12", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "holds"
    assert set(d) == {"conjecture_id", "range", "verdict", "counterexample_count",
                      "counterexample_words", "counterexamples", "tight_cases",
                      "words_checked", "rows"}


def test_verify_extended_reports_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "extended", "--nmax", "10")
    assert code == 1
    assert "COUNTEREXAMPLE abab theta=1 bound=1" in out


def test_verify_section5_csv(capsys):
    code, out, _ = run(capsys, "verify", "section5", "--nmax", "12", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,x,min_theta,bound,kind,tight"
    assert all(l.split(",")[4] == "conjectured_min" for l in lines[1:])


def test_verify_section5_small_nmax_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "section5", "--nmax", "6")
    assert code == 2


def test_verify_effective(capsys):
    code, out, _ = run(capsys, "verify", "effective", "--bounds", "12")
    assert code == 0 and "holds" in out


def test_effective_json(capsys):
    code, out, _ = run(capsys, "effective", "5", "13")
    d = json.loads(out)
    assert code == 0
    assert d["word"] == "a^2b^7a^3b^6" and d["theta"] == 4 == d["theta_effective"]
    assert d["fici_saarela_bound"] == 4 and d["meets_bound"]


def test_effective_4_14(capsys):
    _, out, _ = run(capsys, "effective", "4", "14")
    d = json.loads(out)
    assert d["word"] == "ab^9a^3b^5" and d["theta"] == 5


def test_effective_extension_flag(capsys):
    _, out, _ = run(capsys, "effective", "15", "3")
    d = json.loads(out)
    assert d["word"] == "a^6b^3a^9" and d["formula_extension"] == ["y"]


def test_effective_below_domain(capsys):
    code, _, err = run(capsys, "effective", "2", "5")
    assert code == 2 and "x, y >= 3" in err
