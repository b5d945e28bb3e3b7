import subprocess
import sys

import numpy as np
import pytest

from cheshire.cli import PANELS, main
from cheshire.scenario import read_csv


def test_simulate_total_absorber(tmp_path):
    out = tmp_path / "out.csv"
    assert main(["simulate", "-s", "fig2_absorb_L_100", "-o", str(out)]) == 0
    r = read_csv(out.read_bytes())
    np.testing.assert_allclose(r.d1_postselected, 0, atol=1e-12)


def test_simulate_empty_to_stdout(capfdbinary):
    assert main(["simulate", "-s", "empty"]) == 0
    r = read_csv(capfdbinary.readouterr().out)
    np.testing.assert_allclose(r.d1_postselected, 1, atol=1e-12)


def test_simulate_scenario_file(tmp_path):
    path = tmp_path / "mine.txt"
    path.write_text("arm R: hwp 0.2\nsweep: 0 360deg 16\nmodel: classical\n")
    out = tmp_path / "o.csv"
    assert main(["simulate", "-s", str(path), "-o", str(out)]) == 0
    r = read_csv(out.read_bytes())
    assert len(r) == 16 and r.quantum_d1 is None


def test_simulate_missing_file(capsys):
    assert main(["simulate", "-s", "missing.txt"]) == 2
    assert "missing.txt" in capsys.readouterr().err


def test_simulate_bad_scenario(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("# fine\narm L: attenuate 1.5\n")
    assert main(["simulate", "-s", str(path)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_simulate_unwritable_output(tmp_path):
    assert main(["simulate", "-s", "empty", "-o", str(tmp_path / "no" / "such" / "x.csv")]) == 2


def test_override_matches_text_edit(tmp_path):
    edited = tmp_path / "edited.txt"
    edited.write_text("arm R: hwp 20deg\nimperfect: visibility 0.9\n")
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["simulate", "-s", "fig3_rotate_R", "-o", str(a),
                 "--override", "imperfect=visibility 0.9"]) == 0
    assert main(["simulate", "-s", str(edited), "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bad_override(capsys):
    assert main(["simulate", "-s", "empty", "--override", "imperfect=visibility 2"]) == 1
    assert "--override 1" in capsys.readouterr().err


def test_weak_values_output(capsys):
    assert main(["weak-values"]) == 0
    first = capsys.readouterr().out
    assert first.splitlines() == [
        "Pi_L: 1+0i", "Pi_R: 0+0i", "sigma Pi_L: 0+0i", "sigma Pi_R: 1+0i"
    ]
    main(["weak-values"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("name", PANELS + ("empty",))
def test_compare_ideal_scenarios(name, capsys):
    assert main(["compare", "-s", name]) == 0
    diff = float(capsys.readouterr().out.split("=")[1].split()[0])
    assert diff <= 1e-12


def test_compare_reports_imperfect_mismatch(capsys):
    status = main(["compare", "-s", "fig3_rotate_R", "--override", "imperfect=visibility 0.9"])
    assert status == 3
    assert "phi =" in capsys.readouterr().out


def test_compare_bad_inputs(tmp_path):
    assert main(["compare", "-s", "nope.txt"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("sweep: 1 0 4\n")
    assert main(["compare", "-s", str(bad)]) == 1


def test_figures(tmp_path):
    out = tmp_path / "figs"
    assert main(["figures", "-o", str(out)]) == 0
    files = sorted(p.name for p in out.iterdir())
    assert files == sorted(f"{n}.csv" for n in PANELS)
    r = read_csv((out / "fig2_absorb_R_37.csv").read_bytes())
    np.testing.assert_allclose(r.d1_postselected, 1, atol=1e-12)
    r = read_csv((out / "fig3_rotate_L.csv").read_bytes())
    np.testing.assert_allclose(r.d1_postselected, np.cos(np.radians(20)) ** 2, atol=1e-12)
    snapshot = {p.name: p.read_bytes() for p in out.iterdir()}
    assert main(["figures", "-o", str(out)]) == 0
    assert snapshot == {p.name: p.read_bytes() for p in out.iterdir()}


def test_figures_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["figures", "-o", str(blocker)]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cheshire", "weak-values"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("Pi_L: 1+0i")
