import json

import pytest

from qcong.cli import RunConfig, build_parser, emit_report, expand_cells, main, parse_n_range, run


def records(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_verify_thm1_small(capsys):
    assert main(["verify", "--target", "thm1", "--n", "3:7:2", "--d", "1,2"]) == 0
    recs = records(capsys)
    assert len(recs) == 6
    first = recs[0]
    assert list(first)[:7] == ["schema", "target", "kind", "n", "d", "modulus", "status"]
    assert first["schema"] == 1
    assert first["modulus"] == ["[n]", "Phi_n", "(1-a q^n)", "(a-q^n)"]
    assert [(r["n"], r["d"]) for r in recs] == [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)]


def test_cell_count_for_full_thm1_sweep():
    ns = build_parser().parse_args(["verify", "--target", "thm1", "--n", "3:25:2", "--d", "1,2"])
    cfg = RunConfig(targets=["thm1"], n_values=ns.n, d_values=ns.d)
    assert len(expand_cells(cfg)) == 24


def test_relation(capsys):
    assert main(["verify", "--target", "relation", "--n", "1:15:2"]) == 0
    assert all(r["status"] == "verified" for r in records(capsys))


def test_conjecture_kind(capsys):
    assert main(["verify", "--target", "conj-aeqb-q,aeqb", "--n", "3:5:2", "--primes", "3", "--r", "1"]) == 0
    recs = records(capsys)
    assert {r["kind"] for r in recs} == {"conjecture"}
    assert recs[-1]["target"] == "aeqb" and recs[-1]["margin"] >= 5


def test_classical_cells_skip_invalid_parameters():
    cfg = RunConfig(targets=["c2-half", "j2", "aeqb"], n_values=[3], primes=[3, 5], r_values=[1, 2])
    cells = expand_cells(cfg)
    assert [(c.target, c.p, c.r) for c in cells] == [
        ("c2-half", 5, 1), ("j2", 5, 1), ("aeqb", 3, 1), ("aeqb", 3, 2), ("aeqb", 5, 1), ("aeqb", 5, 2)
    ]


def test_refuted_record_exit_code(monkeypatch, capsys):
    from dataclasses import replace

    from qcong.supercong import CLASSICAL

    monkeypatch.setitem(CLASSICAL, "c2-strong", replace(CLASSICAL["c2-half"], exponent=lambda p, r: 5))
    assert main(["verify", "--target", "c2-strong", "--primes", "5"]) == 1
    rec = records(capsys)[0]
    assert rec["status"] == "refuted" and "witness" in rec


def test_usage_errors(capsys):
    for argv in (
        ["verify", "--target", "nope"],
        ["verify", "--n", "2:6:2"],
        ["verify", "--n", "3:9:3"],
        ["verify", "--d", "3"],
        ["verify", "--strategy", "magic"],
        ["verify", "--jobs", "0"],
        [],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_parse_n_range():
    assert parse_n_range("3:9:2") == [3, 5, 7, 9]
    assert parse_n_range("5") == [5]
    assert parse_n_range("1:5") == [1, 3, 5]


def test_list_targets(capsys):
    assert main(["list-targets"]) == 0
    out = capsys.readouterr().out
    for name in ("thm1", "conj-final", "c2-half", "jackson", "rahman"):
        assert any(line.startswith(name + " ") for line in out.splitlines())


def test_report_file_and_determinism(tmp_path):
    path = tmp_path / "r.jsonl"
    argv = ["verify", "--target", "lem1a,qgw,j2,jackson", "--n", "3:7:2", "--primes", "5,7", "--report", str(path)]
    assert main(argv) == 0
    first = path.read_text().splitlines()
    assert main(argv + ["--jobs", "2"]) == 0
    second = path.read_text().splitlines()

    def strip(lines):
        out = []
        for line in lines:
            rec = json.loads(line)
            rec.pop("elapsed_ms")
            out.append(emit_report(rec))
        return out

    assert strip(first) == strip(second)
    # lem1a: 3 n values; qgw: 3 n values x 2 d; j2: 2 primes; jackson: N = 0..8
    assert len(first) == 3 + 6 + 2 + 9


def test_series_targets_use_truncation(capsys):
    assert main(["verify", "--target", "rahman", "--truncation", "12"]) == 0
    rec = records(capsys)[0]
    assert rec["T"] == 12 and rec["kind"] == "identity"


def test_run_returns_one_on_inapplicable(monkeypatch, capsys):
    import qcong.cli as cli
    from qcong.errors import InapplicablePoint

    def degenerate(N, points):
        raise InapplicablePoint("every Jackson point was degenerate")

    monkeypatch.setattr(cli, "verify_jackson", degenerate)
    cfg = RunConfig(targets=["jackson", "thm1"], n_values=[3], d_values=[1])
    assert run(cfg) == 1
    recs = records(capsys)
    assert recs[0]["status"] == "inapplicable" and "InapplicablePoint" in recs[0]["message"]
    assert recs[-1]["status"] == "verified"
