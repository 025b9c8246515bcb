"""Plot-series CSV emission and figure rendering."""

from __future__ import annotations

import json
import os

import pytest

from gapentropy import DomainError, emit_plot_series, render_report
from gapentropy.cli import main


def test_emit_plot_series(tmp_path):
    path = tmp_path / "series.csv"
    emit_plot_series("demo", [1.0, 2.0, 3.0], [10.0, 20.0, 30.0], path, params="n=3")
    lines = path.read_text().splitlines()
    assert lines[0] == "# series=demo n=3 (all logarithms natural, nats)"
    assert lines[1] == "x,y"
    assert lines[2] == "1,10"
    assert len(lines) == 5


def test_emit_plot_series_validation(tmp_path):
    with pytest.raises(DomainError):
        emit_plot_series("bad", [1.0], [1.0, 2.0], tmp_path / "bad.csv")
    with pytest.raises(DomainError):
        emit_plot_series("empty", [], [], tmp_path / "empty.csv")


def test_render_report_writes_series_and_figures(tmp_path):
    written = render_report(tmp_path, x_max=2000, points=4)
    names = {os.path.basename(p) for p in written}
    assert {
        "entropy_prime_gaps.csv",
        "entropy_uniform_gaps.csv",
        "entropy_uniform_reals.csv",
        "gap6_gap8_ratio.csv",
        "entropy_comparison.png",
        "gap6_gap8_ratio.png",
    } <= names
    for p in written:
        assert os.path.getsize(p) > 0
    with open(os.path.join(tmp_path, "entropy_prime_gaps.csv")) as fh:
        first = fh.readline()
    assert first.startswith("# series=entropy_prime_gaps")
    assert "natural" in first


def test_render_report_validation(tmp_path):
    with pytest.raises(DomainError):
        render_report(tmp_path, x_max=500)
    with pytest.raises(DomainError):
        render_report(tmp_path, x_max=2000, points=1)


def test_report_cli(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code = main(
        ["report", "--out-dir", str(out_dir), "--x-max", "2000", "--points", "3",
         "--format", "json"]
    )
    out = capsys.readouterr().out
    assert code == 0
    written = json.loads(out)["written"]
    assert any(p.endswith("entropy_comparison.png") for p in written)
    for p in written:
        assert os.path.exists(p)
