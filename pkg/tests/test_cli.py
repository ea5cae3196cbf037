import json
import subprocess
import sys

import numpy as np
import pytest

from honeycomb_dct import io as hio
from honeycomb_dct.cli import run
from printed import IH4_II, printed_layout


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_points_of_m6(capsys):
    status, out, _ = call(capsys, "points", "--M", "6", "--set", "HM")
    assert status == 0
    assert len(out.splitlines()) == 19


def test_weights_json(capsys):
    status, out, _ = call(capsys, "weights", "--M", "4", "--format", "json")
    assert json.loads(out) == {"M": 4, "triples": [[2, 1, 1], [2, 2, 0], [3, 0, 1], [3, 1, 0], [4, 0, 0]]}


def test_matrix_csv_matches_printed(capsys):
    status, out, _ = call(capsys, "matrix", "--M", "4", "--kind", "C", "--kernel", "hartley", "--type", "2", "--format", "csv")
    assert status == 0
    data = hio.matrix_from_csv(out).real
    assert data.shape == (10, 10)
    assert np.abs(printed_layout(data) - IH4_II).max() <= 2e-3
    assert out.splitlines()[0].split(",")[0] == "-0.433"


def test_matrix_output_is_deterministic(capsys):
    outs = {call(capsys, "matrix", "--M", "5", "--kind", "C", "--kernel", "fourier", "--type", "3", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_transform_round_trip(tmp_path, capsys):
    rng = np.random.default_rng(11)
    lines = ["s0,s1,s2,re,im"]
    rows = [(p.s0, p.s1, p.s2) for p in __import__("honeycomb_dct").generate_points("HM", 7)]
    rng.shuffle(rows)
    vals = {}
    for r in rows:
        v = complex(rng.normal(), rng.normal())
        vals[r] = v
        lines.append(f"{r[0]},{r[1]},{r[2]},{v.real!r},{v.imag!r}")
    src = tmp_path / "f.csv"
    src.write_text("\n".join(lines) + "\n")
    spec = tmp_path / "spec.csv"
    back = tmp_path / "back.csv"
    common = ["--M", "7", "--kind", "C", "--kernel", "fourier", "--type", "2"]
    status, _, err = call(capsys, "transform", *common, "--input", str(src), "--out", str(spec))
    assert status == 0 and json.loads(err)["roundtrip_max_error"] <= 1e-9
    status, _, _ = call(capsys, "transform", *common, "--input", str(spec), "--inverse", "--out", str(back))
    assert status == 0
    sv = hio.samples_from_csv(back.read_text(), "HM")
    assert max(abs(v - vals[p.triple]) for p, v in zip(sv.points, sv.values)) <= 1e-9


def test_ortho_check_exit_codes(capsys):
    status, out, _ = call(capsys, "ortho-check", "--M", "6", "--kind", "S", "--kernel", "hartley", "--type", "2", "--format", "json")
    assert status == 0 and json.loads(out)["pass"] is True
    status, out, _ = call(capsys, "ortho-check", "--M", "6", "--type", "2", "--tolerance", "0")
    assert status == 1


def test_coefficient_file(tmp_path, capsys):
    from honeycomb_dct.honeycomb import build_family

    path = tmp_path / "c.json"
    path.write_text(hio.coeffs_to_json(build_family("C", "hartley", 5, "II")))
    status, out, _ = call(capsys, "ortho-check", "--type", "file", "--coeffs", str(path))
    assert status == 0
    bad = {"M": 4, "coeffs": [{"weight": w, "plus": [1, 1, 1], "minus": [0, 1, -1]} for w in [[2, 1, 1], [2, 2, 0], [3, 0, 1], [3, 1, 0], [4, 0, 0]]]}
    path.write_text(json.dumps(bad))
    status, _, err = call(capsys, "matrix", "--type", "file", "--coeffs", str(path))
    assert status == 1
    assert json.loads(err)["error"] == "AdmissibilityError"


@pytest.mark.parametrize(
    "argv",
    [
        ["matrix", "--M", "3", "--kind", "S"],
        ["matrix", "--M", "4", "--type", "file"],
        ["matrix", "--M", "4", "--coeffs", "x.json"],
        ["matrix", "--M", "4", "--kind", "Q"],
        ["eval", "--M", "4", "--weight", "1,1,1", "--x", "0,0"],
        ["contour", "--function", "basis"],
        ["nonsense"],
    ],
)
def test_errors_exit_one(capsys, argv):
    status, out, err = call(capsys, *argv)
    assert status == 1 and out == ""
    assert set(json.loads(err)) == {"error", "message"}


def test_eval_and_base_kernel(capsys):
    status, out, _ = call(capsys, "eval", "--M", "4", "--weight", "2,1,1", "--x", "0.2,0.3", "--type", "1", "--kernel", "fourier", "--format", "json")
    fam_val = json.loads(out)["value"]
    status, out, _ = call(capsys, "eval", "--weight", "2,1,1", "--x", "0.2,0.3", "--kernel", "fourier", "--base", "--format", "json")
    assert json.loads(out)["value"] == pytest.approx(fam_val)


def test_contour_grid(capsys):
    status, out, _ = call(capsys, "contour", "--resolution", "10", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 66 and set(rows[0]) == {"x1", "x2", "X", "Y", "re", "im"}
    assert max(r["re"] for r in rows) <= 0.4


def test_interp_and_freq(capsys):
    status, out, _ = call(capsys, "interp-test", "--Ms", "7", "--kinds", "C", "--types", "1", "--resolution", "60", "--format", "json")
    assert status == 0 and json.loads(out)[0]["M"] == 7
    status, out, _ = call(capsys, "freq", "--M", "5", "--kind", "S")
    assert status == 0 and out.startswith("l0,l1,l2,omega_plus,omega_minus")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "honeycomb_dct.cli", "points", "--M", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.count("\n") == 11
