import json

import pytest

from arrowhead.cli import main
from arrowhead.enumeration import iter_paths

TRIVIAL_W_6 = "11111544440111544015"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_prints_sorted_paths(capsys):
    code, out, err = run(capsys, "enumerate", "--kind", "w", "--order", "4")
    assert code == 0
    assert out.splitlines() == list(iter_paths("W", 4))
    assert "count=4" in err


def test_enumerate_count_only(capsys):
    code, out, err = run(capsys, "enumerate", "--kind", "s", "--order", "5", "--count-only")
    assert code == 0
    assert out.strip() == "16"


def test_enumerate_json_records_and_summary(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "w", "--order", "4", "--json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    records, summary = lines[:-1], lines[-1]
    assert [r["digits"] for r in records] == list(iter_paths("W", 4))
    assert all(r["n"] == 4 and r["kind"] == "W" for r in records)
    assert summary == {"n": 4, "kind": "W", "count": 4, "elapsed_s": summary["elapsed_s"]}
    assert "unverified" not in summary


def test_enumerate_out_file(tmp_path, capsys):
    target = tmp_path / "paths.jsonl"
    code, out, err = run(
        capsys, "enumerate", "--kind", "s", "--order", "4", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    records = [json.loads(line) for line in target.read_text().splitlines()]
    assert [r["digits"] for r in records] == list(iter_paths("S", 4))
    assert all(r == {"n": 4, "kind": "S", "digits": r["digits"]} for r in records)


def test_enumerate_flag_conflicts_exit_2(capsys, tmp_path):
    for argv in (
        ["enumerate", "--kind", "w", "--order", "4", "--count-only", "--out", str(tmp_path / "x")],
        ["enumerate", "--kind", "h", "--order", "9"],  # deep search not confirmed
        ["enumerate", "--kind", "w", "--order", "4", "--workers", "-1"],
        ["enumerate", "--kind", "w", "--order", "1"],
        ["enumerate", "--kind", "w", "--order", "13"],
        ["tables"],
        [],
    ):
        with pytest.raises(SystemExit) as exc_info:
            main(argv)
        assert exc_info.value.code == 2
        capsys.readouterr()


def test_deep_flag_admits_large_order_h(capsys):
    # order 8 runs without --deep; order 9 needs it (not run here)
    with pytest.raises(SystemExit):
        main(["enumerate", "--kind", "h", "--order", "9", "--count-only"])
    capsys.readouterr()


def test_transform_both_directions(capsys):
    code, out, _ = run(
        capsys, "transform", "--direction", "w2s", "--path", "15", "--order", "2"
    )
    assert code == 0 and out.strip() == "105"
    code, out, _ = run(
        capsys, "transform", "--direction", "s2w", "--path", "105", "--order", "2"
    )
    assert code == 0 and out.strip() == "15"


def test_transform_json(capsys):
    code, out, _ = run(
        capsys, "transform", "--direction", "w2s", "--path", "15", "--order", "2", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"n": 2, "kind": "S", "digits": "105"}


def test_transform_rejects_invalid_path(capsys):
    code, out, err = run(
        capsys, "transform", "--direction", "w2s", "--path", "51", "--order", "2"
    )
    assert code == 1
    assert "validation failure" in err


def test_transform_json_error_record(capsys):
    code, out, _ = run(
        capsys, "transform", "--direction", "w2s", "--path", "51", "--order", "2", "--json"
    )
    assert code == 1
    record = json.loads(out)
    assert record["error"] == "validation"
    assert record["reason"]


def test_trivial_w(capsys):
    code, out, _ = run(capsys, "trivial-w", "--order", "6")
    assert code == 0 and out.strip() == TRIVIAL_W_6
    code, out, _ = run(capsys, "trivial-w", "--order", "6", "--json")
    assert json.loads(out) == {"n": 6, "kind": "W", "digits": TRIVIAL_W_6}
    code, _, err = run(capsys, "trivial-w", "--order", "1")
    assert code == 1 and "validation failure" in err


def test_curve_er_expansion(capsys):
    code, out, _ = run(
        capsys,
        "curve", "--method", "er", "--order", "2", "--level", "2", "--generator", "105",
    )
    assert code == 0 and out.strip() == "012105450"


def test_curve_nr_expansion_to_file(tmp_path, capsys):
    target = tmp_path / "curve.txt"
    code, out, err = run(
        capsys,
        "curve", "--method", "nr", "--order", "2", "--level", "3",
        "--generator", "15", "--out", str(target),
    )
    assert code == 0
    assert target.read_text().strip() == "15002231102115540553440015"


def test_curve_json(capsys):
    code, out, _ = run(
        capsys,
        "curve", "--method", "er", "--order", "2", "--level", "1",
        "--generator", "105", "--json",
    )
    assert json.loads(out) == {"n": 2, "method": "ER", "level": 1, "digits": "105"}


def test_curve_size_cap(capsys):
    code, _, err = run(
        capsys,
        "curve", "--method", "er", "--order", "2", "--level", "3",
        "--generator", "105", "--size-cap", "10",
    )
    assert code == 1 and "validation failure" in err


def test_curve_rejects_wrong_generator(capsys):
    code, _, err = run(
        capsys,
        "curve", "--method", "er", "--order", "2", "--level", "1", "--generator", "15",
    )
    assert code == 1 and "validation failure" in err


def test_verify_accepts_valid_curve(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--method", "er", "--order", "2", "--level", "2", "--path", "012105450",
    )
    assert code == 0 and out.strip() == "ok"
    code, out, _ = run(
        capsys,
        "verify", "--method", "er", "--order", "2", "--level", "2",
        "--path", "012105450", "--json",
    )
    assert json.loads(out) == {"ok": True}


def test_verify_rejects_corrupt_curve(capsys):
    code, _, err = run(
        capsys,
        "verify", "--method", "er", "--order", "2", "--level", "1", "--path", "000",
    )
    assert code == 1
    assert "tile" in err and "index 2" in err


def test_lsystem_text_output(capsys):
    code, out, _ = run(
        capsys, "lsystem", "--generator", "15", "--order", "2", "--method", "er"
    )
    assert code == 0
    assert out == "axiom=A\nA=-B+A+B-\nB=+A-B-A+\n"
    code, out, _ = run(
        capsys, "lsystem", "--generator", "15", "--order", "2", "--method", "nr"
    )
    assert out == "axiom=X\nX=-YF+X+FY-\nY=+XF-Y-FX+\n"


def test_lsystem_json(capsys):
    code, out, _ = run(
        capsys, "lsystem", "--generator", "15", "--order", "2", "--method", "nr", "--json"
    )
    record = json.loads(out)
    assert record["axiom"] == "X"
    assert record["productions"] == {"X": "-YF+X+FY-", "Y": "+XF-Y-FX+"}
    assert record["turn"] == 60


def test_lsystem_rejects_order_mismatch(capsys):
    code, _, err = run(
        capsys, "lsystem", "--generator", "15", "--order", "3", "--method", "er"
    )
    assert code == 1 and "validation failure" in err


def test_render_curve_file(tmp_path, capsys):
    source = tmp_path / "digits.txt"
    source.write_text("012105450\n")
    target = tmp_path / "curve.svg"
    code, _, err = run(
        capsys,
        "render", "--input", str(source), "--order", "2", "--level", "2",
        "--out", str(target),
    )
    assert code == 0
    svg = target.read_text()
    assert svg.startswith("<?xml")
    assert "<path" in svg and "<polygon" not in svg


def test_render_overlay(tmp_path, capsys):
    source = tmp_path / "digits.txt"
    source.write_text("012105450\n")
    target = tmp_path / "overlay.svg"
    code, _, _ = run(
        capsys,
        "render", "--input", str(source), "--order", "2", "--level", "2",
        "--overlay", "--out", str(target),
    )
    assert code == 0
    svg = target.read_text()
    assert svg.count("<polygon") == 9 and "<path" in svg


def test_render_missing_input(tmp_path, capsys):
    code, _, err = run(
        capsys,
        "render", "--input", str(tmp_path / "absent.txt"), "--order", "2",
        "--level", "1", "--out", str(tmp_path / "x.svg"),
    )
    assert code == 1 and "validation failure" in err


def test_dimension_text_and_json(capsys):
    code, out, _ = run(capsys, "dimension", "--order", "2")
    assert code == 0 and out.strip() == "1.584962500721156"
    code, out, _ = run(capsys, "dimension", "--order", "3")
    assert out.strip() == "1.630929753571457"
    code, out, _ = run(capsys, "dimension", "--order", "2", "--json")
    record = json.loads(out)
    assert record["n"] == 2
    assert abs(record["dimension"] - 1.584962500721156) < 1e-15
    code, _, err = run(capsys, "dimension", "--order", "1")
    assert code == 1


def test_tables_check(capsys):
    code, out, _ = run(capsys, "tables", "--check")
    assert code == 0 and out.strip() == "table consistency OK"
    code, out, _ = run(capsys, "tables", "--check", "--json")
    assert json.loads(out) == {"ok": True, "cells": 36}


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])
    assert exc_info.value.code == 0
    out = capsys.readouterr().out
    assert out.startswith("arrowhead ")
