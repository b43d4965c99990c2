"""
QThermo-Py 命令行测试：子命令输出、退出码与图表数据
"""

import csv
import io
import json
import math

import pytest

from src.cli import main
from src.cli.figures import density_table, render_svg, write_figures
from src.utils.tables import Table


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _records(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestQfiCommand:
    def test_complex_point(self, capsys):
        code, out, _ = _run(capsys, "qfi", "--n", "1", "--point", "0,0,0.5")
        assert code == 0
        assert out.startswith("quantity,value\n")
        values = {r["quantity"]: float(r["value"]) for r in _records(out)}
        assert values["det_closed_form"] == pytest.approx(4.0 / 3.0, rel=1e-15)
        assert values["closed_form[2][2]"] == pytest.approx(4.0 / 3.0, rel=1e-15)
        assert values["inverse_product"] == pytest.approx(0.25, rel=1e-12)
        assert len(values) == 2 * 9 + 5

    def test_quaternionic_point_with_negative_coordinate(self, capsys):
        code, out, _ = _run(capsys, "qfi", "--n", "2", "--point=-0.3,0.1,0.2,0,0.4")
        assert code == 0
        values = {r["quantity"]: float(r["value"]) for r in _records(out)}
        assert values["inverse_product"] == pytest.approx(1.0 / 16.0, rel=1e-10)
        assert values["max_deviation"] < 1e-8

    def test_near_boundary_point(self, capsys):
        code, out, err = _run(capsys, "qfi", "--n", "1", "--point", "0,0,0.99999")
        assert code == 0, err
        values = {r["quantity"]: float(r["value"]) for r in _records(out)}
        assert values["closed_form[2][2]"] == pytest.approx(1.0 / (1.0 - 0.99999**2), rel=1e-9)
        assert values["max_deviation"] < 1e-8 * values["closed_form[2][2]"]

    def test_boundary_point(self, capsys):
        code, out, err = _run(capsys, "qfi", "--n", "1", "--point", "0,0,1")
        assert code == 2
        assert out == ""
        assert "BOUNDARY_POINT" in err

    def test_wrong_dimension(self, capsys):
        code, _, err = _run(capsys, "qfi", "--n", "2", "--point", "0,0,0.5")
        assert code == 2
        assert "point" in err

    def test_failed_internal_check(self, capsys, monkeypatch):
        monkeypatch.setattr("src.cli.commands.QFI_DEVIATION_TOL", 0.0)
        code, out, err = _run(capsys, "qfi", "--n", "1", "--point", "0.1,0.2,0.3")
        assert code == 3
        assert out.startswith("quantity,value\n")
        assert "CONSISTENCY_ERROR" in err


class TestPriorCommand:
    def test_structure(self, capsys):
        code, out, _ = _run(capsys, "prior", "structure", "--n", "1", "--z", "0")
        assert code == 0
        (row,) = _records(out)
        assert float(row["value"]) == pytest.approx(2.0 / math.pi, rel=1e-15)

    def test_pdf(self, capsys):
        code, out, _ = _run(capsys, "prior", "pdf", "--n", "2", "--point", "0,0,0,0,0")
        assert code == 0
        (row,) = _records(out)
        assert float(row["pdf"]) == pytest.approx(2.0 / math.pi**3, rel=1e-15)

    @pytest.mark.parametrize("n", ["1", "2"])
    def test_normcheck(self, capsys, n):
        code, out, _ = _run(capsys, "prior", "normcheck", "--n", n)
        assert code == 0
        (row,) = _records(out)
        assert float(row["mass"]) == pytest.approx(1.0, abs=1e-10)

    def test_marginalcheck(self, capsys):
        code, out, _ = _run(capsys, "prior", "marginalcheck", "--n", "2", "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert len(records) == 5
        assert all(r["deviation"] < 1e-8 for r in records)

    def test_sample_is_reproducible(self, capsys):
        first = _run(capsys, "prior", "sample", "--n", "1", "--count", "5", "--seed", "7")
        second = _run(capsys, "prior", "sample", "--n", "1", "--count", "5", "--seed", "7")
        assert first[0] == second[0] == 0
        assert first[1] == second[1]
        lines = first[1].splitlines()
        assert lines[0] == "index,x,y,z"
        assert len(lines) == 6

    def test_sample_to_file(self, capsys, tmp_path):
        target = tmp_path / "out" / "samples.csv"
        code, out, _ = _run(capsys, "prior", "sample", "--n", "2", "--count", "3", "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8").splitlines()[0] == "index,u,v,x,y,z"

    def test_unwritable_output(self, capsys, tmp_path):
        blocker = tmp_path / "file.txt"
        blocker.write_text("", encoding="utf-8")
        code, _, err = _run(capsys, "prior", "structure", "--z", "0.5", "--output", str(blocker / "x.csv"))
        assert code == 4
        assert "IO_ERROR" in err


class TestGibbsCommand:
    def test_variance_at_zero(self, capsys):
        code, out, _ = _run(capsys, "gibbs", "var", "--n", "1", "--beta", "0")
        assert code == 0
        (row,) = _records(out)
        assert float(row["variance"]) == pytest.approx(0.25, abs=1e-12)

    def test_mean_anchor(self, capsys):
        code, out, _ = _run(capsys, "gibbs", "mean", "--n", "1", "--beta", "1")
        assert code == 0
        (row,) = _records(out)
        assert float(row["mean"]) == pytest.approx(-0.2401937, abs=1e-7)

    def test_pdf(self, capsys):
        code, out, _ = _run(capsys, "gibbs", "pdf", "--n", "2", "--beta", "0", "--z", "0")
        assert code == 0
        (row,) = _records(out)
        assert float(row["pdf"]) == pytest.approx(8.0 / (3.0 * math.pi), rel=1e-14)

    def test_sweep(self, capsys):
        code, out, _ = _run(
            capsys, "gibbs", "sweep", "--quantity", "jeffreys", "--n", "2",
            "--beta-min", "-1", "--beta-max", "1", "--beta-step", "0.5",
        )
        assert code == 0
        records = _records(out)
        assert [r["beta"] for r in records] == ["-1.0", "-0.5", "0.0", "0.5", "1.0"]
        assert float(records[2]["jeffreys"]) == pytest.approx(math.sqrt(1.0 / 6.0), abs=1e-12)

    def test_fisher_range(self, capsys):
        code, _, _ = _run(capsys, "gibbs", "fisher", "--n", "1", "--beta", "150")
        assert code == 2

    def test_sweep_needs_whole_steps(self, capsys):
        code, _, err = _run(
            capsys, "gibbs", "sweep", "--quantity", "mean", "--beta-min", "0", "--beta-max", "1", "--beta-step", "0.3",
        )
        assert code == 2
        assert "DOMAIN_EXCEEDED" in err

    def test_config_file(self, capsys, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("n: 2\nbeta: 0.0\nformat: json\n", encoding="utf-8")
        code, out, _ = _run(capsys, "gibbs", "var", "--config", str(path))
        assert code == 0
        assert json.loads(out)[0]["variance"] == pytest.approx(1.0 / 6.0, abs=1e-12)

    def test_command_line_overrides_config_file(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        path.write_text('{"n": 2, "beta": 0.0}', encoding="utf-8")
        code, out, _ = _run(capsys, "gibbs", "var", "--config", str(path), "--n", "1")
        assert code == 0
        (row,) = _records(out)
        assert float(row["variance"]) == pytest.approx(0.25, abs=1e-12)

    def test_unknown_action(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["gibbs", "nope"])
        assert info.value.code == 2


class TestFiguresCommand:
    @pytest.fixture(scope="class")
    def figure_dirs(self, tmp_path_factory):
        first = tmp_path_factory.mktemp("figures_cli")
        second = tmp_path_factory.mktemp("figures_api")
        code = main(["figures", "--output", str(first)])
        write_figures(second)
        return code, first, second

    def test_exit_code(self, figure_dirs):
        assert figure_dirs[0] == 0

    def test_files_and_row_counts(self, figure_dirs):
        _, first, _ = figure_dirs
        for name, rows in [("fig1", 401), ("fig2", 401), ("fig3", 201), ("fig4", 201), ("fig5", 201), ("fig6", 201)]:
            lines = (first / f"{name}.csv").read_text(encoding="utf-8").splitlines()
            assert len(lines) == rows + 1
        assert (first / "fig1.csv").read_text(encoding="utf-8").startswith("z,p_n1,p_n2\n")
        assert (first / "fig6.csv").read_text(encoding="utf-8").startswith("beta,value_n1,value_n2\n")

    def test_manifest(self, figure_dirs):
        _, first, _ = figure_dirs
        manifest = json.loads((first / "manifest.json").read_text(encoding="utf-8"))
        assert manifest["files"] == [f"fig{i}.csv" for i in range(1, 7)]
        assert all(a["passed"] for a in manifest["assertions"]), manifest["assertions"]
        names = {a["name"] for a in manifest["assertions"]}
        assert {"fig1_quaternionic_peak_higher", "fig2_complex_peak_higher", "fig5_closed_form_at_zero"} <= names
        assert manifest["reported"]["variance_total_variation_n1"] > 0.0
        assert "seed" in manifest["determinism"]

    def test_byte_identical_reruns(self, figure_dirs):
        _, first, second = figure_dirs
        for name in [f"fig{i}.csv" for i in range(1, 7)] + ["manifest.json"]:
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_jeffreys_peaks(self, figure_dirs):
        _, first, _ = figure_dirs
        rows = _records((first / "fig6.csv").read_text(encoding="utf-8"))
        centre = next(r for r in rows if r["beta"] == "0.0")
        assert float(centre["value_n1"]) == pytest.approx(0.5, abs=1e-7)
        assert float(centre["value_n2"]) == pytest.approx(0.4082483, abs=1e-7)

    def test_missing_output_directory(self, capsys):
        code, _, _ = _run(capsys, "figures")
        assert code == 2


def test_svg_rendering_is_deterministic(tmp_path):
    table = Table(columns=["z", "p_n1", "p_n2"], rows=[[-1.0, 0.0, 0.0], [0.0, 0.6, 0.8], [1.0, 0.0, 0.0]])
    render_svg("fig1", table, tmp_path / "a.svg")
    render_svg("fig1", table, tmp_path / "b.svg")
    content = (tmp_path / "a.svg").read_bytes()
    assert content == (tmp_path / "b.svg").read_bytes()
    assert content.lstrip().startswith(b"<?xml")


def test_density_table_at_zero_matches_structure_function():
    table = density_table(0.0)
    centre = table.rows[200]
    assert centre[0] == 0.0
    assert centre[1] == pytest.approx(2.0 / math.pi, rel=1e-14)
    assert centre[2] == pytest.approx(8.0 / (3.0 * math.pi), rel=1e-14)
