from fractions import Fraction

import pytest

import mvop


def test_compute_polys_schema_and_rationals():
    r = mvop.compute_polys(2, Fraction(1, 2), nmax=3)
    assert r.ok
    assert r.data["schema"] == 1
    assert [p["n"] for p in r.data["polynomials"]] == [0, 1, 2, 3]
    assert r.data["spec"]["nu"] == "1/2"


def test_verify_all_passes():
    r = mvop.verify(2, "1/2", a=[-1], delta=[1, 1], nmax=4)
    assert r.ok
    assert r.data["summary"]["verified"]
    assert r.data["summary"]["failures"] == 0


def test_verify_unknown_suite():
    with pytest.raises(ValueError):
        mvop.verify(2, "1/2", suite="nope")


def test_bad_weight_rejected():
    with pytest.raises(ValueError):
        mvop.verify(2, "1/2", a=[-1, 3])
    with pytest.raises(ValueError):
        mvop.compute_polys(2, "-1")


def test_xi_csv_header():
    r = mvop.xi(2, 1, nmax=3)
    assert r.ok
    assert r.csv.splitlines()[0] == "n,i,j,xi"


def test_lie_dimension():
    assert mvop.lie("x^3").data["dimension"] == 5
    assert mvop.lie(truncate=6).data["dimension"] == 9


def test_dualhahn_closed_form():
    r = mvop.dualhahn(3, 1, c=1, d=2, nmax=3)
    assert r.ok
    assert r.data["all_equal"]


def test_scalar_helpers():
    # L_2^{(0)}(x) = 1 - 2x + x^2/2
    assert mvop.laguerre_poly(0, 2) == [1, -2, Fraction(1, 2)]
    assert mvop.parse_rational("-4/6") == Fraction(-2, 3)
    assert mvop.dual_hahn(0, 1, 1, 1, 3) == 1
    assert mvop.thread_cap() >= 1
