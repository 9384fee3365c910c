import pytest

import epw_planes as ep


def test_fano_report():
    rep = ep.family_report(ep.fano_family())
    assert rep["incident_pairs"] == 21
    assert rep["span_dim"] == 7


def test_fano_enumeration_mod_2():
    planes = ep.enumerate_planes_modp(ep.fano_family(), 2)
    assert len(planes) == 7
    assert all(len(b) == 3 and all(x in (0, 1) for row in b for x in row) for b in planes)


def test_three_lines():
    lines = ep.enumerate_lines_modp(ep.fano_four_planes(), 3)
    expected = []
    for i, j in [(0, 3), (1, 4), (2, 5)]:
        expected.append([[int(c == i) for c in range(6)], [int(c == j) for c in range(6)]])
    assert sorted(lines) == sorted(expected)


def test_a_plus_sextic():
    eq = ep.epw_equation(ep.build_a_plus())
    assert not eq["identically_zero"]
    assert all(sum(t["exp"]) == 6 for t in eq["poly"])
    # (x0x5 - x1x4 + x2x3)^3 has 10 monomials
    assert len(eq["poly"]) == 10


def test_curve():
    out = ep.curve_equation(ep.random_curve_lagrangian(1), 0)
    assert out["curve"]["plane"] is False
    assert len(out["singularities"]["points"]) == 1


def test_bounds_and_certificates():
    assert ep.bound_maximize()["max_theta"] == 20
    assert ep.bound_maximize(1, 2)["max_theta"] == 17
    cert = ep.completeness_certificate(ep.random_family(1, 4, 4), [2])
    assert cert["verdict"] == "Incomplete"
    assert ep.roncisvalle_check(1, 2)["contained"]


def test_errors():
    with pytest.raises(ep.MathError) as info:
        ep.bound_audit(20, 0, 0, 0, 1)
    assert info.value.code == "InfeasibleInput"
    with pytest.raises(ep.MathError):
        ep.family_report("{not json")
