import json

import numpy as np
import pytest

from lctkit import (
    HermiteState,
    Metric,
    Signature,
    hermite_state,
    inverse,
    lct_to_json_dict,
    make_lct,
    read_signal_csv,
    write_signal_csv,
)
from lctkit.cli import main
from util import rel_l2, rel_l2_up_to_phase

M10 = Metric(Signature(1, 0))


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def fractional_dict(theta):
    c, s = np.cos(theta), np.sin(theta)
    return lct_to_json_dict(make_lct([[c]], [[s]], [[-s]], [[c]], M10))


def identity_dict(n_plus=1, n_minus=1):
    metric = Metric(Signature(n_plus, n_minus))
    n = metric.dim
    eye, zero = np.eye(n).tolist(), np.zeros((n, n)).tolist()
    return {"signature": {"n_plus": n_plus, "n_minus": n_minus},
            "a": eye, "b": zero, "c": zero, "d": eye}


def gaussian_csv(tmp_path, name="input.csv"):
    sig = hermite_state(HermiteState(0, 0.0, 0.0, np.sqrt(0.5)), (-12.0, 24.0 / 1023, 1024))
    path = tmp_path / name
    write_signal_csv(sig, path)
    return str(path), sig


def test_classify_identity(tmp_path, capsys):
    path = write_json(tmp_path / "id.json", identity_dict())
    assert main(["classify", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["symplectic"] is True
    assert report["symplectic_residual"] == 0.0
    assert report["pseudo_unitary"]["flag"] is True
    assert report["isodispersion"]["flag"] is True
    assert report["lorentz_embedded"] is True
    assert report["fourier_like"] is False


def test_classify_fourier(tmp_path, capsys):
    path = write_json(tmp_path / "fourier.json", fractional_dict(np.pi / 2))
    assert main(["classify", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["fourier_like"] is True
    assert report["pseudo_unitary"]["flag"] is True
    assert report["isodispersion"]["flag"] is True
    assert report["lorentz_embedded"] is False


def test_classify_non_symplectic_exits_2(tmp_path, capsys):
    bad = {"signature": {"n_plus": 1, "n_minus": 0},
           "a": [[1.0]], "b": [[1.0]], "c": [[1.0]], "d": [[1.0]]}
    path = write_json(tmp_path / "bad.json", bad)
    assert main(["classify", path]) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["symplectic"] is False


def test_classify_parse_errors_exit_1(tmp_path, capsys):
    not_square = identity_dict()
    not_square["a"] = [[1.0, 0.0]]
    path = write_json(tmp_path / "shape.json", not_square)
    assert main(["classify", path]) == 1
    assert main(["classify", str(tmp_path / "missing.json")]) == 1
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert main(["classify", str(garbled)]) == 1


def test_compose_adds_fractional_angles(tmp_path, capsys):
    first = write_json(tmp_path / "first.json", fractional_dict(0.35))
    second = write_json(tmp_path / "second.json", fractional_dict(0.85))
    out = tmp_path / "composed.json"
    assert main(["compose", second, first, "--out", str(out)]) == 0
    composed = json.loads(out.read_text())
    expected = fractional_dict(1.2)
    for key in ("a", "b", "c", "d"):
        np.testing.assert_allclose(composed[key], expected[key], atol=1e-14)


def test_exp_rotation_generator(tmp_path, capsys):
    gen = {"signature": {"n_plus": 1, "n_minus": 0},
           "lambda": [[0.0]], "mu": [[0.0]], "phi": [[0.0]], "theta": [[0.6]]}
    path = write_json(tmp_path / "gen.json", gen)
    assert main(["exp", path]) == 0
    result = json.loads(capsys.readouterr().out)
    np.testing.assert_allclose(result["a"], [[np.cos(0.6)]], atol=1e-15)
    np.testing.assert_allclose(result["c"], [[np.sin(0.6)]], atol=1e-15)
    np.testing.assert_allclose(result["b"], [[-np.sin(0.6)]], atol=1e-15)


def test_exp_invalid_generator_exits_2(tmp_path, capsys):
    gen = {"signature": {"n_plus": 1, "n_minus": 1},
           "lambda": [[1.0, 0.0], [0.0, 1.0]],
           "mu": [[0.0, 0.0], [0.0, 0.0]],
           "phi": [[0.0, 0.0], [0.0, 0.0]],
           "theta": [[0.0, 0.0], [0.0, 0.0]]}
    path = write_json(tmp_path / "gen.json", gen)
    assert main(["exp", path]) == 2


def test_random_is_deterministic_and_symplectic(tmp_path, capsys):
    assert main(["random", "--signature", "1,3", "--seed", "5", "--scale", "0.5"]) == 0
    first = capsys.readouterr().out
    assert main(["random", "--signature", "1,3", "--seed", "5", "--scale", "0.5"]) == 0
    assert capsys.readouterr().out == first
    path = tmp_path / "rand.json"
    path.write_text(first)
    assert main(["classify", str(path)]) == 0


def test_apply_fourier_to_gaussian(tmp_path):
    matrix = write_json(tmp_path / "fourier.json", fractional_dict(np.pi / 2))
    csv_in, sig = gaussian_csv(tmp_path)
    csv_out = tmp_path / "out.csv"
    assert main(["apply", matrix, csv_in, "--out", str(csv_out)]) == 0
    result = read_signal_csv(csv_out)
    expected = np.pi**-0.25 * np.exp(-result.times**2 / 2.0)
    assert rel_l2_up_to_phase(result.samples, expected) <= 1e-6


def test_apply_round_trip_through_inverse(tmp_path):
    theta = 0.7
    c, s = np.cos(theta), np.sin(theta)
    L = make_lct([[c]], [[s]], [[-s]], [[c]], M10)
    forward = write_json(tmp_path / "fwd.json", lct_to_json_dict(L))
    backward = write_json(tmp_path / "bwd.json", lct_to_json_dict(inverse(L)))
    csv_in, sig = gaussian_csv(tmp_path)
    mid, out = tmp_path / "mid.csv", tmp_path / "back.csv"
    assert main(["apply", forward, csv_in, "--out", str(mid)]) == 0
    assert main(["apply", backward, str(mid), "--out", str(out)]) == 0
    back = read_signal_csv(out)
    assert rel_l2(back.samples, sig.samples) <= 1e-4


def test_apply_degenerate_kernel_exits_3(tmp_path):
    matrix = write_json(tmp_path / "id.json", identity_dict(1, 0))
    csv_in, _ = gaussian_csv(tmp_path)
    assert main(["apply", matrix, csv_in, "--out", str(tmp_path / "o.csv")]) == 3


def test_apply_missing_file_exits_1(tmp_path):
    matrix = write_json(tmp_path / "fourier.json", fractional_dict(np.pi / 2))
    assert main(["apply", matrix, str(tmp_path / "none.csv"),
                 "--out", str(tmp_path / "o.csv")]) == 1


def test_state_moments_ground(tmp_path, capsys):
    out = tmp_path / "state.csv"
    assert main(["state", "--n", "0", "--B", "0.5",
                 "--grid=-12,0.0234375,1025", "--out", str(out)]) == 0
    moments = json.loads(capsys.readouterr().out)
    assert abs(moments["T"]) <= 1e-5 and abs(moments["Omega"]) <= 1e-5
    assert moments["A"] == pytest.approx(0.5, abs=1e-5)
    assert moments["B"] == pytest.approx(0.5, abs=1e-5)
    assert read_signal_csv(out).n == 1025


def test_state_moments_excited_product(tmp_path, capsys):
    assert main(["state", "--n", "3", "--B", "0.5", "--grid=-12,0.0234375,1025"]) == 0
    moments = json.loads(capsys.readouterr().out)
    assert moments["A"] * moments["B"] == pytest.approx(49.0 / 4.0, abs=1e-3)


def test_state_usage_error_on_negative_B(capsys):
    with pytest.raises(SystemExit) as err:
        main(["state", "--n", "0", "--B", "-1", "--grid=-12,0.023,1024"])
    assert err.value.code == 2


def test_state_grid_too_narrow_exits_4(capsys):
    assert main(["state", "--n", "0", "--B", "0.5", "--grid=-1,0.1,21"]) == 4


def test_disp_fourier_swaps_windows(tmp_path, capsys):
    matrix = write_json(tmp_path / "fourier.json", fractional_dict(np.pi / 2))
    disp = write_json(tmp_path / "disp.json",
                      {"P": [0.0], "X": [0.0], "a_win": [[1.0]], "b_win": [[0.5]]})
    assert main(["disp", matrix, disp]) == 0
    result = json.loads(capsys.readouterr().out)
    np.testing.assert_allclose(result["a_win"], [[0.5]], atol=1e-12)
    np.testing.assert_allclose(result["b_win"], [[1.0]], atol=1e-12)


def test_disp_rejects_shear_exits_5(tmp_path):
    shear = {"signature": {"n_plus": 1, "n_minus": 0},
             "a": [[1.0]], "b": [[1.0]], "c": [[0.0]], "d": [[1.0]]}
    matrix = write_json(tmp_path / "shear.json", shear)
    disp = write_json(tmp_path / "disp.json",
                      {"P": [0.0], "X": [0.0],
                       "a_win": [[2.0**-0.5]], "b_win": [[2.0**-0.5]]})
    assert main(["disp", matrix, disp]) == 5
