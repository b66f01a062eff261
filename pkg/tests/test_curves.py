from fractions import Fraction

import pytest

from curveclass.curves import (
    bad_locus,
    certify_realness,
    fiber_constancy_check,
    make_curve,
    make_parametrization,
    singular_locus,
    solve_xy_system,
)
from curveclass.errors import CurveError, PreconditionError, ZeroDivisorDenominatorError
from curveclass.mpoly import MPoly, eval_at
from curveclass.unipoly import UPoly

X, Y = MPoly.var("x"), MPoly.var("y")
T = lambda *cs: UPoly.from_ints("t", cs)  # noqa: E731


def cusp():
    return make_curve(Y**2 - X**3)


def example2_curve():
    return make_curve(Y**2 - X**3 * (X**2 + 1) ** 2)


def example3_curve():
    return make_curve(Y**4 - X * (X**2 + Y**2))


def node():
    return make_curve(Y**2 - X**2 * (X + 1))


def cubic_curve():
    F = Y**3 - X**2 * Y**2 + Y * X**2 * (X + 1) - X**4 * (X + 1)
    return make_curve(F)


def test_make_curve_accepts_the_demo_curves():
    for c in (cusp, example2_curve, example3_curve, node, cubic_curve):
        c()


def test_make_curve_rejects_squares_with_witness():
    with pytest.raises(CurveError) as exc:
        make_curve((Y - X) ** 2)
    w = exc.value.witness
    assert w in (Y - X, X - Y)


def test_make_curve_rejects_constants():
    with pytest.raises(CurveError):
        make_curve(MPoly.const(5))


def test_certify_realness_cusp():
    rep = certify_realness(cusp(), budget=10)
    assert rep.certified


def test_certify_realness_empty_real_locus_unverified():
    rep = certify_realness(make_curve(Y**2 + X**2 + 1), budget=40)
    assert not rep.certified


def test_certify_realness_node():
    rep = certify_realness(node(), budget=10)
    assert rep.certified


def test_certify_realness_example3_biquadratic():
    rep = certify_realness(example3_curve(), budget=16)
    assert rep.certified


def test_certify_realness_cubic_splits_components():
    rep = certify_realness(cubic_curve(), budget=16)
    assert rep.certified
    assert len(rep.factors) == 2  # parabola y - x^2 and the conic-like part


def test_singular_locus_cusp():
    pts = singular_locus(cusp())
    assert len(pts) == 1
    assert pts[0].is_rational() and pts[0].coords() == (0, 0)
    assert pts[0].is_real


def test_singular_locus_example2():
    pts = singular_locus(example2_curve())
    reals = [p for p in pts if p.is_real]
    others = [p for p in pts if not p.is_real]
    assert len(reals) == 1 and reals[0].coords() == (0, 0)
    assert len(others) == 1
    cls = others[0]
    assert cls.class_size == 2
    # the class is cut out by x^2 + 1 with y = 0
    m1 = cls.m1()
    assert [c for c in m1.coeffs] == [1, 0, 1]


def test_singular_locus_node_origin_only():
    pts = singular_locus(node())
    assert len(pts) == 1 and pts[0].coords() == (0, 0)


def test_points_satisfy_the_system_exactly():
    for curve, q in ((example2_curve(), X * (X**2 + 1)), (cusp(), X)):
        for pt in bad_locus(curve, q):
            assert eval_at(curve.F, pt.xgen(), pt.ygen()).is_zero()
            assert eval_at(q, pt.xgen(), pt.ygen()).is_zero()


def test_bad_locus_cusp():
    pts = bad_locus(cusp(), X)
    assert len(pts) == 1 and pts[0].coords() == (0, 0) and pts[0].is_real


def test_bad_locus_example2():
    pts = bad_locus(example2_curve(), X * (X**2 + 1))
    reals = [p for p in pts if p.is_real]
    others = [p for p in pts if not p.is_real]
    assert len(reals) == 1 and reals[0].coords() == (0, 0)
    assert len(others) == 1 and others[0].class_size == 2
    assert [c for c in others[0].m1().coeffs] == [1, 0, 1]


def test_bad_locus_example3_quadruple_contact():
    pts = bad_locus(example3_curve(), X)
    assert len(pts) == 1 and pts[0].coords() == (0, 0) and pts[0].is_real


def test_bad_locus_zero_divisor_error_names_component():
    with pytest.raises(ZeroDivisorDenominatorError) as exc:
        bad_locus(node(), Y**2 - X**2 * (X + 1))
    assert exc.value.component is not None
    with pytest.raises(ZeroDivisorDenominatorError):
        bad_locus(make_curve(X * (Y - 1)), X)


def test_bad_locus_constant_denominator_is_empty():
    assert bad_locus(cusp(), MPoly.const(7)) == []


def test_conjugation_symmetry_of_classes():
    pts = singular_locus(example2_curve()) + bad_locus(example2_curve(), X * (X**2 + 1))
    total = sum(p.class_size - len(p.embeddings) for p in pts)
    assert total % 2 == 0


def test_locus_independent_of_coordinate_roles():
    # same point set when x and y swap roles (cross-membership check)
    def swap(p):
        return MPoly({(e[0], e[1], e[3], e[2]): c for e, c in p.terms.items()})

    curve = example2_curve()
    q = X * (X**2 + 1)
    direct = bad_locus(curve, q)
    swapped = solve_xy_system([swap(curve.F), swap(q)])
    assert sum(p.class_size for p in direct) == sum(p.class_size for p in swapped)
    assert sum(len(p.embeddings) for p in direct) == sum(len(p.embeddings) for p in swapped)
    for pt in swapped:
        # a swapped point (b, a) must satisfy the original system as (a, b)
        assert eval_at(curve.F, pt.ygen(), pt.xgen()).is_zero()
        assert eval_at(q, pt.ygen(), pt.xgen()).is_zero()


def test_fiber_constancy_cusp_parametrization():
    pi = make_parametrization(cusp(), T(0, 0, 1), T(0, 0, 0, 1))
    rep = fiber_constancy_check(pi, T(0, 1))
    assert rep["finite"] and rep["constant_on_real_fibers"]


def test_fiber_constancy_example2_constant_on_real_fibers():
    # t -> (t^2, t^3 (t^4 + 1)); the doubled fibers sit over (+-i, 0)
    pi = make_parametrization(example2_curve(), T(0, 0, 1), T(0, 0, 0, 1, 0, 0, 0, 1))
    rep = fiber_constancy_check(pi, T(0, 1))
    assert rep["constant_on_real_fibers"]
    non_real = [p for p in rep["locus"] if not p.is_real]
    assert any(p.class_size >= 2 for p in non_real)


def test_fiber_constancy_node_fails_with_witness():
    pi = make_parametrization(node(), T(-1, 0, 1), T(0, -1, 0, 1))
    rep = fiber_constancy_check(pi, T(0, 1))
    assert not rep["constant_on_real_fibers"]
    (pt, detail), = rep["witnesses"]
    assert pt.coords() == (0, 0)
    values = {v for _, v in detail["values"]}
    assert values == {Fraction(1), Fraction(-1)}


def test_parametrization_must_land_on_curve():
    with pytest.raises(PreconditionError):
        make_parametrization(cusp(), T(0, 1), T(0, 1))


def test_certify_realness_never_certifies_empty_real_locus():
    # soundness fuzz: curves with empty or tiny real locus stay unverified
    for F in (Y**2 + X**2 + 1, Y**2 + X**4 + 2, Y**4 + X**6 + X**2 + 1):
        rep = certify_realness(make_curve(F), budget=48)
        assert not rep.certified
