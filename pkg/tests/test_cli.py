from __future__ import annotations

import json
import subprocess
import sys

import pytest

from spex.cli import main, parse_campaign_line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rho_k3(capsys):
    assert run(capsys, "rho", "--g6", "Bw") == (0, "2.000000000 ± 1e-9\n", "")


def test_construct_tait(capsys):
    code, out, _ = run(capsys, "construct", "--family", "tait:n=13,s=2,t=3")
    assert code == 0
    assert out.strip() == "L~aK[A@_[?O@_B"


def test_minor_check(capsys):
    _, c9, _ = run(capsys, "construct", "--family", "cycle:n=9")
    assert run(capsys, "minor-check", "--g6", c9.strip(), "--pattern", "star:3")[1] == "no minor\n"
    code, out, _ = run(capsys, "minor-check", "--family", "complete:n=5", "--pattern", "biclique:2,3")
    head, witness = out.splitlines()
    assert code == 0 and head == "minor found: biclique:2,3"
    assert len(json.loads(witness)) == 5


def test_property_check(capsys):
    out = run(capsys, "property-check", "--family", "petersen-complement", "--s", "4", "--t", "8")[1]
    assert out == "has the (4,8)-property\n"


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--theorem", "lemma2.2", "--t", "4", "--n-max", "8")[0] == 0
    assert run(capsys, "verify", "--theorem", "thm1.5", "--t", "3", "--n-max", "5")[0] == 1
    assert run(capsys, "verify")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "rho", "--g6", "!!")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "rho", "--g6", "Bw", "--width", "-1")[0] == 2
    assert run(capsys, "construct", "--family", "tait:n=3")[0] == 2
    assert run(capsys, "verify", "--theorem", "thm1.4")[0] == 2


def test_search_and_report(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--n", "6", "--constraint", "k1t:t=3", "--out-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["schema"] == 1
    code, table, _ = run(capsys, "report", "--dir", str(tmp_path), "--format", "csv")
    assert code == 0 and "k1t:t=3" in table
    (tmp_path / "bad.json").write_text('{"schema": 7}')
    assert run(capsys, "report", "--dir", str(tmp_path))[0] == 2


def test_showdown_table(capsys):
    code, out, _ = run(capsys, "showdown", "--n", "22", "--s", "5", "--t", "8")
    assert code == 0 and "designated strictly first: no" in out


def test_output_stable(capsys):
    first = run(capsys, "verify", "--theorem", "le000", "--trials", "20")
    second = run(capsys, "verify", "--theorem", "le000", "--trials", "20")
    assert first == second


def test_campaign_file(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("# two campaigns\ntheorem=thm1.4 t=3 n_max=7\ntheorem=lemma3.0 s=2 t=5\n")
    monkeypatch.setenv("SPEX_THREADS", "1")
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0
    assert "thm1.4 (t=3, n_max=7): PASS" in out and "lemma3.0 (s=2, t=5): PASS" in out


def test_campaign_line_parsing():
    assert parse_campaign_line("theorem=thm1.4 t=3 n-max=9") == ("thm1.4", {"t": 3, "n_max": 9})


def test_console_script_entry():
    res = subprocess.run(
        [sys.executable, "-m", "spex.cli", "rho", "--family", "complete:n=5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert res.stdout == "4.000000000 ± 1e-9\n"
