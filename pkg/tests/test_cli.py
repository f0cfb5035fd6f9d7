import json

import pytest

from skewarm.cli import main

EX1 = {
    "schema_version": "1",
    "kind": "product",
    "factors": [{"kind": "zmod", "n": 2}, {"kind": "zmod", "n": 2}],
    "endomorphism": {"builtin": "swap"},
    "label": "example1",
}
EX2 = {
    "schema_version": "1",
    "kind": "trivial_extension",
    "base": {"kind": "zmod", "n": 4},
    "endomorphism": {"builtin": "negate_second_component"},
    "label": "example2",
}


@pytest.fixture
def ex1_file(tmp_path):
    path = tmp_path / "ex1.json"
    path.write_text(json.dumps(EX1))
    return str(path)


@pytest.fixture
def ex2_file(tmp_path):
    path = tmp_path / "ex2.json"
    path.write_text(json.dumps(EX2))
    return str(path)


def test_validate_example1(ex1_file, capsys):
    assert main(["validate", ex1_file]) == 0
    out = capsys.readouterr().out
    assert "size 4, unital, automorphism, orbit (0,2)" in out


def test_validate_malformed_kind(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": "1", "kind": "mystery"}))
    assert main(["validate", str(path)]) == 2


def test_validate_broken_table(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(
        json.dumps(
            {
                "schema_version": "1",
                "kind": "table",
                "add_table": [[0, 1], [1, 0]],
                "mul_table": [[1, 0], [0, 0]],
            }
        )
    )
    assert main(["validate", str(path)]) == 2
    err = capsys.readouterr().err
    assert "(" in err  # the violating instance is spelled out


def test_check_example2_fails_with_witness(ex2_file, capsys):
    assert main(["check", ex2_file, "--property", "q-alpha-skew-armendariz", "--deg", "1"]) == 1
    out = capsys.readouterr().out
    assert "fails" in out and "offending value" in out


def test_check_example1_reduced_holds(ex1_file):
    assert main(["check", ex1_file, "--property", "reduced"]) == 0


def test_check_budget_exceeded(ex2_file, capsys):
    assert main(["check", ex2_file, "--property", "q-alpha-skew-armendariz", "--deg", "9"]) == 3
    assert "budget" in capsys.readouterr().err


def test_check_requires_envelope(ex1_file, capsys):
    assert main(["check", ex1_file, "--property", "q-alpha-skew-armendariz"]) == 2
    assert main(["check", ex1_file, "--property", "laurent-q-alpha-skew"]) == 2
    assert main(["check", ex1_file, "--property", "powerseries-q-alpha-skew"]) == 2


def test_check_unknown_property(ex1_file, capsys):
    assert main(["check", ex1_file, "--property", "mystery"]) == 2


def test_structured_roundtrip_through_replay(ex2_file, tmp_path, capsys):
    code = main(
        [
            "check",
            ex2_file,
            "--property",
            "q-alpha-skew-armendariz",
            "--deg",
            "1",
            "--format",
            "structured",
        ]
    )
    assert code == 1
    record = capsys.readouterr().out
    vfile = tmp_path / "verdict.json"
    vfile.write_text(record)
    assert main(["replay", str(vfile)]) == 0


def test_structured_output_is_deterministic(ex2_file, capsys):
    args = [
        "check",
        ex2_file,
        "--property",
        "alpha-skew-armendariz",
        "--deg",
        "1",
        "--format",
        "structured",
    ]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second


def test_replay_rejects_tampered_record(ex2_file, tmp_path, capsys):
    main(
        [
            "check",
            ex2_file,
            "--property",
            "q-alpha-skew-armendariz",
            "--deg",
            "1",
            "--format",
            "structured",
        ]
    )
    record = json.loads(capsys.readouterr().out)
    record["witness"]["offending"]["index"] = record["ring"]["add_table"][0][0]
    vfile = tmp_path / "tampered.json"
    vfile.write_text(json.dumps(record))
    assert main(["replay", str(vfile)]) == 1


def test_replay_rejects_inconsistent_text_rendering(ex2_file, tmp_path, capsys):
    main(
        [
            "check",
            ex2_file,
            "--property",
            "q-alpha-skew-armendariz",
            "--deg",
            "1",
            "--format",
            "structured",
        ]
    )
    record = json.loads(capsys.readouterr().out)
    record["witness"]["p_text"] = "(1,1) + (1,1)*x"
    vfile = tmp_path / "text_tamper.json"
    vfile.write_text(json.dumps(record))
    assert main(["replay", str(vfile)]) == 1
    assert "textual rendering" in capsys.readouterr().out


def test_corpus_all_quick(capsys):
    assert main(["corpus", "--all", "--deg", "1", "--transport-seeds", "1"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert "exploratory, skipped" in out


def test_replay_rejects_out_of_range_index(ex2_file, tmp_path, capsys):
    main(
        [
            "check",
            ex2_file,
            "--property",
            "q-alpha-skew-armendariz",
            "--deg",
            "1",
            "--format",
            "structured",
        ]
    )
    record = json.loads(capsys.readouterr().out)
    record["witness"]["p"]["coeffs"][0] = 999
    vfile = tmp_path / "oob.json"
    vfile.write_text(json.dumps(record))
    assert main(["replay", str(vfile)]) == 2


def test_corpus_single_entry(capsys):
    assert main(["corpus", "--entry", "example2", "--deg", "1"]) == 0
    assert "all checks passed" in capsys.readouterr().out


def test_corpus_unknown_entry(capsys):
    assert main(["corpus", "--entry", "nope"]) == 2


def test_corpus_dump_definition(capsys):
    assert main(["corpus", "--dump-definition", "example1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "product"


def test_budget_env_var(ex2_file, monkeypatch, capsys):
    monkeypatch.setenv("SKEWARM_TUPLE_BUDGET", "10")
    assert main(["check", ex2_file, "--property", "q-alpha-skew-armendariz", "--deg", "1"]) == 3


def test_check_laurent_and_series(ex1_file):
    assert (
        main(
            [
                "check",
                ex1_file,
                "--property",
                "laurent-q-alpha-skew",
                "--window",
                "1,1,1,1",
            ]
        )
        == 0
    )
    assert (
        main(["check", ex1_file, "--property", "powerseries-q-alpha-skew", "--trunc", "2"])
        == 0
    )
