import json
import logging

import pytest

from keyslide.cli import EXIT_BOUND, EXIT_OK, EXIT_USAGE, build_parser, main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_classify_reports_pattern_witness(capsys):
    status, out, _ = run(capsys, "classify", "1,1,3,3")
    assert status == EXIT_OK
    report = json.loads(out)
    assert report == {
        "index": [1, 1, 3, 3],
        "verdict": "NOT_MULTIPLICITY_FREE",
        "theorem": "thm_main2_pattern_c",
        "witness": {"pattern": "c", "positions": [1, 2, 3, 4]},
    }


def test_classify_text(capsys):
    status, out, _ = run(capsys, "classify", "0,0,3,2", "--format", "text")
    assert status == EXIT_OK
    assert out.splitlines()[:2] == ["index: (0,0,3,2)", "verdict: MULTIPLICITY_FREE"]


def test_verify_two_terms(capsys):
    status, out, _ = run(capsys, "verify", "2,0,0,3")
    assert status == EXIT_OK
    payload = json.loads(out)
    assert payload["holds"] is True
    assert [t["weight"] for t in payload["terms"]] == [[2, 0, 0, 3], [3, 0, 0, 2]]


def test_expand_latex(capsys):
    status, out, _ = run(capsys, "expand", "0,0,3,2", "--format", "latex")
    assert status == EXIT_OK
    assert out.startswith("\\kappa_{(0,0,3,2)} = ")
    assert out.count("\\mathfrak{F}") == 5
    assert "\\mathfrak{F}_{(1,2,2,0)}" in out


def test_expand_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "expand", "1,0,2")
    _, second, _ = run(capsys, "expand", "1,0,2")
    assert first == second
    assert json.loads(first)["terms"] == [
        {"weight": [1, 0, 2], "multiplicity": 1},
        {"weight": [2, 0, 1], "multiplicity": 1},
    ]


def test_tableau_count_matches_expansion(capsys):
    _, out, _ = run(capsys, "tableaux", "0,0,3,2", "--format", "json")
    tableaux = json.loads(out)
    _, out, _ = run(capsys, "expand", "0,0,3,2")
    expansion = json.loads(out)
    assert tableaux["kind"] == "QKT"
    assert tableaux["count"] == expansion["total_multiplicity"] == 5


def test_tableaux_kt_text(capsys):
    status, out, _ = run(capsys, "tableaux", "0,2", "--kt")
    assert status == EXIT_OK
    assert out.startswith("KT(0,2): 3 tableaux")


def test_key_polynomial_text(capsys):
    status, out, _ = run(capsys, "key", "0,1", "--format", "text")
    assert status == EXIT_OK
    assert out == "κ_{(0,1)} = x2 + x1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "0,,3"],
        ["classify", "1,-2"],
        ["frobnicate", "1,2"],
        ["limit", "1,2"],
        ["tableaux", "1,2", "--kt", "--qkt"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == EXIT_USAGE
    assert out == ""


def test_help_exits_cleanly(capsys):
    status, out, _ = run(capsys, "--help")
    assert status == EXIT_OK
    assert "expand" in out


def test_bound_exceeded_flag(capsys):
    status, out, err = run(capsys, "expand", "3,3,3", "--max-sum", "5")
    assert status == EXIT_BOUND
    assert out == ""
    assert err.startswith("keyslide: enumeration bound exceeded")


def test_bound_exceeded_env(capsys, monkeypatch):
    monkeypatch.setenv("KEYSLIDE_BOUND_SUM", "4")
    status, _, _ = run(capsys, "key", "2,3")
    assert status == EXIT_BOUND


def test_bad_env_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("KEYSLIDE_BOUND_SUM", "abc")
    status, _, err = run(capsys, "key", "2,3")
    assert status == EXIT_USAGE
    assert "KEYSLIDE_BOUND_SUM" in err


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("KEYSLIDE_BOUND_SUM", "4")
    status, _, _ = run(capsys, "key", "2,3", "--max-sum", "5")
    assert status == EXIT_OK


def test_unsafe_bounds_warns(capsys, caplog):
    with caplog.at_level(logging.WARNING, logger="keyslide.config"):
        status, _, _ = run(capsys, "key", "2,3", "--max-sum", "1", "--unsafe-bounds")
    assert status == EXIT_OK
    assert "enumeration bounds disabled" in caplog.text


def test_limit_passes(capsys):
    status, out, _ = run(capsys, "limit", "3,2", "--vars", "2", "--mmax", "4")
    assert status == EXIT_OK
    assert json.loads(out)["verdict"] == "STABLE_MATCH"


def test_limit_inconclusive_is_not_a_failure(capsys, caplog):
    with caplog.at_level(logging.WARNING, logger="keyslide.cli"):
        status, out, _ = run(capsys, "limit", "2,1", "--vars", "2", "--mmax", "0")
    assert status == EXIT_OK
    assert json.loads(out)["verdict"] == "INCONCLUSIVE"
    assert "raise --mmax" in caplog.text


def test_limit_slide(capsys):
    status, out, _ = run(capsys, "limit", "1,2", "--vars", "2", "--slide", "--mmax", "3")
    assert status == EXIT_OK
    payload = json.loads(out)
    assert payload["kind"] == "slide"
    assert payload["passed"] is True


def test_sweep_ndjson(capsys):
    status, first, _ = run(capsys, "sweep", "--len-max", "2", "--entry-max", "2")
    _, second, _ = run(capsys, "sweep", "--len-max", "2", "--entry-max", "2")
    assert status == EXIT_OK
    assert first == second
    lines = first.splitlines()
    assert len(lines) == 9
    assert lines[0] == '{"classifier_verdict":"SINGLE_TERM","index":[0,0],"max_multiplicity":1}'
    assert [json.loads(line)["index"] for line in lines][-1] == [2, 2]


def test_parser_defaults():
    args = build_parser().parse_args(["sweep"])
    assert (args.len_max, args.entry_max, args.workers) == (4, 3, None)
    args = build_parser().parse_args(["tableaux", "1,2"])
    assert not args.kt


@pytest.mark.slow
def test_sweep_output_does_not_depend_on_workers(capsys):
    argv = ["sweep", "--len-max", "4", "--entry-max", "3", "--format", "json"]
    status, single, _ = run(capsys, *argv, "--workers", "1")
    assert status == EXIT_OK
    _, pooled, _ = run(capsys, *argv, "--workers", "4")
    assert single == pooled
    assert len(single.splitlines()) == 256
