import json
import os

import pytest

try:
    import _logcy as logcy
except ImportError:  # installed package layout
    import logcy

PLANE = json.dumps({
    "fan": [[1, 0], [0, 1], [-1, -1]],
    "blowups": {"1": ["2"], "2": ["3"], "3": ["5+t"]},
})

WING = json.dumps({
    "fan": [[1, 0], [0, 1], [-1, -1]],
    "blowups": {"1": ["2", "3"]},
})

F2 = json.dumps({
    "fan": [[1, 0], [0, 1], [-1, 2], [0, -1]],
    "blowups": {"1": ["2"], "3": ["3"]},
})


def test_scalar_roundtrip():
    assert logcy.parse_scalar("t/t^2") == "t^-1"
    assert logcy.parse_scalar("(6+2*t)/(3-t)") == "(6 + 2*t)/(3 - t)"
    assert logcy.scalar_val("t^2*(1+t)") == 2
    assert logcy.scalar_val("0") is None
    assert logcy.scalar_arith("2", "mul", "3+t") == "6 + 2*t"


def test_tropical_correspondence():
    cycle = logcy.tropicalize(PLANE, "E[1,1] + E[2,1] + E[3,1] - Dbar[1]")
    assert cycle == [(1, 1, 1), (2, 1, 1), (3, 1, 1)]
    back = logcy.detropicalize(PLANE, cycle)
    assert logcy.tropicalize(PLANE, back) == cycle
    assert logcy.scalar_pow("1+t", -1) == "(1)/(1 + t)"


def test_info_and_dperp():
    info = logcy.info(PLANE)
    assert info["n"] == 3
    assert info["Q"] == 3
    assert info["s"] == 0
    assert info["rank_dperp"] == 1
    basis = logcy.dperp(PLANE)
    assert len(basis) == 1
    assert "E[1,1]" in basis[0]


def test_compare_main_theorem():
    report = logcy.compare(PLANE, 1)
    assert report["pass"]
    assert report["entries"][0]["nonarch"] == "30 + 6*t"
    assert report["entries"][0]["algebraic"] == "30 + 6*t"
    assert report["entries"][0]["cech"] == "30 + 6*t"

    wing = logcy.compare(WING, 1)
    assert wing["pass"]
    assert wing["entries"][0]["nonarch"] == "(3)/(2)"


def test_h1_torsion():
    rep = logcy.h1(F2, True)
    assert rep["free_rank"] == 0
    assert rep["torsion"] == [2]


def test_monodromy():
    assert logcy.int_monodromy(PLANE, 1, 1, 1) == ((1, 1), (0, 1))
    assert logcy.int_monodromy(WING, 1, 1, 2) == ((1, 2), (0, 1))
    k = logcy.kaffine_monodromy(PLANE, 1, 1)
    assert k["matrix"] == ((1, 0), (1, 1))
    assert k["translation"][0] == "(1)/(2)"


def test_local_fan():
    assert logcy.local_fan([1, 1], [1, 1, 1, 1]) == "u0=(1,0,1) u1=(0,1,1) uinf=(-1,1,1)"
    with pytest.raises(Exception):
        logcy.local_fan([2, 1], [1, 1, 1, 1])


def test_errors_surface():
    with pytest.raises(Exception):
        logcy.info(json.dumps({"fan": [[1, 0], [0, 2]]}))
    with pytest.raises(Exception):
        logcy.parse_scalar("1/(t-t)")


def test_fixture_documents_load():
    fixture_dir = os.environ.get("LOGCY_FIXTURES")
    if not fixture_dir:
        pytest.skip("fixture directory not provided")
    with open(os.path.join(fixture_dir, "p2_3.json")) as fh:
        doc = fh.read()
    assert logcy.compare(doc, 1)["pass"]


def test_small_sweep():
    summary = logcy.sweep(5, 99)
    assert summary["count"] == 5
    assert summary["all_pass"]
