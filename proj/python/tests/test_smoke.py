import cmath
import math

import pytest

import qgraph


def test_theta_values():
    assert qgraph.theta(0, 0, 0)["text"] == "1"
    assert qgraph.theta(1, 1, 0)["text"] == "-q^(1/2) - q^(-1/2)"
    t = qgraph.theta(2, 2, 2)
    assert t["admissible"]
    assert qgraph.evaluate("theta", [2, 2, 2], 1.0) == pytest.approx(-3.0)
    assert not qgraph.theta(1, 1, 1)["admissible"]


def test_tet_values():
    assert qgraph.tet([0] * 6)["text"] == "1"
    assert qgraph.evaluate("tet", [2] * 6, 1.5) == pytest.approx(786961 / 219024)
    assert qgraph.evaluate("tet", [1, 1, 2, 1, 1, 2], 1.5) == pytest.approx(133 / 78)
    primed = qgraph.tet([1, 1, 2, 1, 1, 2], primed=True)
    assert primed["text"] == "q^(3/2) + 2*q^(1/2) + 2*q^(-1/2) + q^(-3/2)"
    with pytest.raises(ValueError):
        qgraph.tet([1, 2, 3])


def test_verify():
    assert "annihilation" in qgraph.verify_checks()
    ok = qgraph.verify("annihilation", graph="theta", grid_max=6)
    assert ok["failure_count"] == 0 and ok["tested"] > 0
    bad = qgraph.verify("annihilation", graph="theta", edge="a", grid_max=6, negative_control=True)
    assert bad["failure_count"] > 0
    with pytest.raises(ValueError):
        qgraph.verify("annihilation", colour=3)


def test_dilog_and_potentials():
    assert qgraph.dilog(1.0).real == pytest.approx(math.pi**2 / 6)
    assert abs(qgraph.dilog(0.3 + 0.4j) - (0.26659686674274041589 + 0.46136289181910899428j)) < 1e-13
    y = cmath.exp(qgraph.log_y_theta([0.5, 0.5, 0.5])[0])
    assert y.real == pytest.approx(-7 / 9)
    with pytest.raises(ValueError):
        qgraph.log_y_theta([1.0, 0.5, 0.5])


def test_saddle_and_sweeps():
    s = qgraph.saddle([0.5] * 6)
    assert len(s["rows"]) == 3 and s["failures"] == 0
    assert qgraph.residual(samples=5)["failures"] == 0
    assert qgraph.lagrangian(graph="tet", samples=2, tol=1e-5)["failures"] == 0
    assert qgraph.gradient(samples=5)["failures"] == 0


def test_growth():
    g = qgraph.growth("theta", [0.5, 0.5, 0.5])
    assert 1.6 < g["ratios"][-1] < 2.4


def test_cli_exit_codes():
    code, out, _ = qgraph.run_cli("theta", "-c", "1,1,0")
    assert code == 0 and "q^(1/2)" in out
    assert qgraph.run_cli("verify", "annihilation", "--edge", "a", "--max", "6", "--negative-control")[0] == 1
    assert qgraph.run_cli("bogus")[0] == 2
