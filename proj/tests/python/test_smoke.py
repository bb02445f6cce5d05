"""Python smoke tests: the bound module exposes the core surface correctly."""

import json
import math

import pytest

import hodgeheat as hh


def test_generate_and_shape():
    cx = hh.Complex.generate("cycle:3:filled")
    assert cx.dim == 2
    assert cx.block_size(0) == 3
    assert cx.block_size(1) == 3
    assert cx.block_size(2) == 1
    assert cx.keys(1) == ["0,1", "0,2", "1,2"]
    assert cx.total_simplices() == 7


def test_json_round_trip():
    cx = hh.Complex.generate("torus-triangulation")
    again = hh.Complex.from_json(cx.to_json())
    assert again.to_json() == cx.to_json()
    assert [hh.betti(again, k) for k in range(3)] == [1, 2, 1]


def test_parse_error():
    with pytest.raises(hh.ParseError):
        hh.Complex.from_json("{not json")


def test_spectrum_hollow_triangle_edges():
    cx = hh.Complex.generate("cycle:3:hollow")
    evs, lambda2, kernel_dim = hh.spectrum(cx, degree=1)
    assert lambda2 == pytest.approx(0.0, abs=1e-12)
    assert kernel_dim == 1
    assert list(evs) == pytest.approx([0.0, 3.0, 3.0], abs=1e-9)


def test_laplacian_single_edge():
    cx = hh.Complex.generate("path:2")
    A, m, keys = hh.laplacian(cx, degree=0)
    assert keys == ["0", "1"]
    assert list(m) == [1.0, 1.0]
    assert A[0, 0] == pytest.approx(1.0)
    assert A[0, 1] == pytest.approx(-1.0)


def test_curvature_filled_triangle():
    cx = hh.Complex.generate("cycle:3:filled")
    values = hh.curvature(cx, degree=1)
    assert list(values) == pytest.approx([3.0, 3.0, 3.0], abs=1e-10)


def test_heat_kernel_single_edge():
    cx = hh.Complex.generate("path:2")
    p1 = hh.heat_kernel(cx, degree=0, t=1.0)
    expected = (1.0 - math.exp(-2.0)) / 2.0
    assert p1[0, 1].real == pytest.approx(expected, abs=1e-12)
    assert p1[0, 1].imag == pytest.approx(0.0, abs=1e-15)


def test_schrodinger_extraction():
    # filled triangle: the degree-1 block is diagonal, all weight in the potential
    cx = hh.Complex.generate("cycle:3:filled")
    b, o, c, m = hh.schrodinger_data(cx, degree=1)
    assert c[0] == pytest.approx(3.0, abs=1e-10)  # curvature * m on unit weights
    assert b[0, 1] == pytest.approx(0.0, abs=1e-14)

    # hollow triangle: edges couple through shared vertices
    ring_b, ring_o, ring_c, ring_m = hh.schrodinger_data(
        hh.Complex.generate("cycle:3"), degree=1
    )
    assert ring_b[0, 1] > 0
    # diagonal mass 2 minus two unit couplings: flat edges carry zero potential
    assert ring_c[0] == pytest.approx(0.0, abs=1e-10)


def test_report_json_small():
    cx = hh.Complex.generate("path:3")
    doc = json.loads(hh.report_json(cx, seed=3, t_grid=[0.2, 1.0, 5.0]))
    assert doc["all_pass"] is True
    assert doc["seed"] == 3
    checks = {r["check"] for r in doc["reports"]}
    assert "gaussian-kernel-bound" in checks
    assert "harmonic-rank-consistency" in checks


def test_cli_in_process():
    code, out, err = hh.run_cli(["generate", "cycle", "3", "hollow"])
    assert code == 0, err
    complex_json = out
    code, out, err = hh.run_cli(["spectrum", "--degree", "1"], stdin_text=complex_json)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["eigenvalues"] == pytest.approx([0.0, 3.0, 3.0], abs=1e-9)

    code, _out, err = hh.run_cli(["validate"], stdin_text="{broken")
    assert code == 2
    assert "error" in err
