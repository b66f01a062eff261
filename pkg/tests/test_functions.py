from fractions import Fraction

import pytest

from curveclass.curves import make_curve
from curveclass.errors import AssignmentError, NotIntegralError
from curveclass.functions import (
    classify,
    continuity_probe,
    fiber_table,
    graph_ideal,
    graph_real_closed,
    in_Kplus,
    in_KRplus,
    is_integral,
    is_regular,
    make_function,
    present_extension,
    probe_function,
    verify_r_subintegral,
)
from curveclass.mpoly import MPoly, PolyIdeal, ideals_equal, normal_form

X, Y, T = MPoly.var("x"), MPoly.var("y"), MPoly.var("t")


def cusp_f(value=0):
    curve = make_curve(Y**2 - X**3)
    return make_function(curve, Y, X, [((0, 0), value)])


def example2_f():
    curve = make_curve(Y**2 - X**3 * (X**2 + 1) ** 2)
    return make_function(curve, Y, X * (X**2 + 1), [((0, 0), 0)])


def example3_f(value=0):
    curve = make_curve(Y**4 - X * (X**2 + Y**2))
    return make_function(curve, Y**2, X, [((0, 0), value)])


def cubic_f():
    curve = make_curve(Y**3 - X**2 * Y**2 + Y * X**2 * (X + 1) - X**4 * (X + 1))
    return make_function(curve, Y, X, [((0, 0), 0)])


def node_f(value):
    curve = make_curve(Y**2 - X**2 * (X + 1))
    return make_function(curve, Y, X, [((0, 0), value)])


def test_make_function_validates_assignments():
    cusp_f(0)
    with pytest.raises(AssignmentError, match="missing value at \\(0, 0\\)"):
        curve = make_curve(Y**2 - X**3)
        make_function(curve, Y, X, [])
    with pytest.raises(AssignmentError):
        curve = make_curve(Y**2 - X**3)
        make_function(curve, Y, X, [((0, 0), 0), ((1, 1), 0)])


def test_graph_ideal_cusp_contains_expected_relations():
    f = cusp_f()
    gid = graph_ideal(f)
    for rel in (Y**2 - X**3, X * T - Y, T**2 - X, T * Y - X**2):
        assert not normal_form(rel, gid.gb_lex)


def test_graph_ideal_example3_contains_relation():
    f = example3_f()
    gid = graph_ideal(f)
    assert not normal_form(T**2 - T - X, gid.gb_lex)


def test_is_regular_cancellation():
    curve = make_curve(Y**2 - X**3)
    f = make_function(curve, X * Y, X, [((0, 0), 0)])
    ok, detail = is_regular(f)
    assert ok
    # the cofactor agrees with y on the curve
    gb = graph_ideal(f).gb_lex
    assert not normal_form(detail["witness"] - Y, gb)


def test_is_regular_rejects_y_over_x_on_cusp():
    ok, detail = is_regular(cusp_f())
    assert not ok
    assert detail["normal_form"] == Y


def test_is_regular_value_mismatch():
    curve = make_curve(Y**2 - X**3)
    f = make_function(curve, X * Y, X, [((0, 0), 5)])
    ok, detail = is_regular(f)
    assert not ok
    assert "assigned" in detail["reason"]


def test_is_integral_certificates():
    ok, wit = is_integral(cusp_f())
    assert ok and wit == T**2 - X
    ok, wit = is_integral(example3_f())
    assert ok and wit == T**2 - T - X


def test_fiber_reports_cusp_origin():
    f = cusp_f()
    (rep,) = fiber_table(f)
    assert rep.point.coords() == (0, 0)
    assert rep.distinct_complex == 1
    assert rep.real_root_counts == (1,)
    assert rep.singleton == 0
    assert rep.matches_assigned


def test_fiber_reports_example2_nonreal_class():
    f = example2_f()
    table = fiber_table(f)
    nonreal = [rep for rep in table if not rep.point.is_real]
    assert len(nonreal) == 1
    assert nonreal[0].distinct_complex == 2
    real = [rep for rep in table if rep.point.is_real]
    assert len(real) == 1 and real[0].distinct_complex == 1


def test_fiber_reports_cubic_origin():
    f = cubic_f()
    (rep,) = fiber_table(f)
    assert rep.distinct_complex == 3
    assert rep.real_root_counts == (1,)
    assert not rep.matches_assigned or rep.distinct_complex == 1


def test_graph_real_closed():
    ok, _ = graph_real_closed(cusp_f())
    assert ok
    ok, _ = graph_real_closed(cubic_f())
    assert ok  # unique real root 0 of t^3 + t
    ok, wit = graph_real_closed(example3_f())
    assert not ok
    roots = wit[0]["real_roots"]
    assert roots == [Fraction(0), Fraction(1)]


def test_in_KRplus_examples():
    ok, _ = in_KRplus(example2_f())
    assert ok
    ok, detail = in_KRplus(cubic_f())
    assert not ok
    assert detail["conditions"][1] and detail["conditions"][2] and detail["conditions"][3]
    assert not detail["conditions"][4]
    (w,) = detail["witnesses"][4]
    assert w["distinct_complex"] == 3 and w["distinct_real"] == 1
    ok, detail = in_KRplus(example3_f())
    assert not ok
    assert not detail["conditions"][3]


def test_in_Kplus_examples():
    ok, _ = in_Kplus(cusp_f())
    assert ok
    ok, detail = in_Kplus(example2_f())
    assert not ok
    (w,) = detail["nonreal_witnesses"]
    assert w["distinct_complex"] == 2 and w["point"].class_size == 2
    # polynomial function: no bad points at all
    curve = make_curve(Y**2 - X**3)
    g = make_function(curve, X + Y, MPoly.const(1), [])
    ok, _ = in_Kplus(g)
    assert ok


def test_classify_matrix():
    assert classify(cusp_f()).verdicts == {
        "regular": "no",
        "k_plus": "yes",
        "k_r_plus": "yes",
        "integral": "yes",
    }
    assert classify(example2_f()).verdicts == {
        "regular": "no",
        "k_plus": "no",
        "k_r_plus": "yes",
        "integral": "yes",
    }
    assert classify(example3_f()).verdicts == {
        "regular": "no",
        "k_plus": "no",
        "k_r_plus": "no",
        "integral": "yes",
    }
    rep = classify(cubic_f())
    assert rep.verdicts["k_r_plus"] == "no" and rep.verdicts["integral"] == "yes"
    assert rep.hierarchy_consistent


def test_present_extension_cusp():
    pres = present_extension(cusp_f())
    assert pres.birational
    assert pres.integral_relation == T**2 - X
    for rel in (Y**2 - X**3, X * T - Y, T**2 - X, T * Y - X**2):
        assert not normal_form(rel, graph_ideal(cusp_f()).gb_lex)
    gb_relations = PolyIdeal(list(pres.relations))
    assert ideals_equal(
        gb_relations, PolyIdeal([Y**2 - X**3, X * T - Y, T**2 - X, T * Y - X**2])
    )


def test_present_extension_requires_integrality():
    curve = make_curve(Y - X**2 + 1)  # smooth conic-like parabola
    # f = 1/x on it: bad point where x = 0 -> (0, -1)
    f = make_function(curve, MPoly.const(1), X, [((0, -1), 5)])
    ok, wit = is_integral(f)
    assert not ok and wit is None
    with pytest.raises(NotIntegralError):
        present_extension(f)


def test_verify_r_subintegral_routes_agree():
    for fb in (cusp_f, example2_f, example3_f, cubic_f):
        f = fb()
        ok_int, _ = is_integral(f)
        if not ok_int:
            continue
        res = verify_r_subintegral(f)
        kr, _ = in_KRplus(f)
        assert res["r_subintegral"] == kr
        kp, _ = in_Kplus(f)
        assert res["subintegral"] == kp


def test_verify_r_subintegral_node():
    f = node_f(1)
    res = verify_r_subintegral(f)
    assert not res["r_subintegral"]
    w = res["witnesses"][0]
    assert w["fiber"] == [Fraction(-1), Fraction(1)]


def test_subintegral_example_flags():
    res = verify_r_subintegral(cusp_f())
    assert res == {"r_subintegral": True, "subintegral": True, "witnesses": []}
    res = verify_r_subintegral(example2_f())
    assert res["r_subintegral"] and not res["subintegral"]


def test_probe_cusp_consistent():
    f = cusp_f()
    pt = f.bad_points[0]
    out = continuity_probe(f, pt, f.assigned[0])
    assert out["outcome"] == "consistent"


def test_probe_node_value_one_violated():
    f = node_f(1)
    out = probe_function(f)
    assert out["outcome"] == "violated"


def test_probe_example3_violated():
    f = example3_f()
    out = probe_function(f)
    assert out["outcome"] == "violated"


def test_probe_never_violates_kr_members():
    for fb in (cusp_f, example2_f, cubic_f):
        f = fb()
        out = probe_function(f)
        assert out["outcome"] != "violated" or classify(f).verdicts["k_r_plus"] == "no"


def test_pole_on_a_line_is_not_integral():
    # the x-axis with f = 1/x: the saturated ideal <y, x t - 1> : x^oo has
    # no monic relation for t (empty fiber over x = 0)
    curve = make_curve(Y)
    f = make_function(curve, MPoly.const(1), X, [((0, 0), 3)])
    ok, wit = is_integral(f)
    assert not ok and wit is None
    rep = classify(f)
    assert rep.verdicts == {
        "regular": "no", "k_plus": "no", "k_r_plus": "no", "integral": "no"
    }
    (fiber,) = fiber_table(f)
    assert fiber.distinct_complex == 0


def test_presentation_echo_reproduces_singleton_pattern():
    # re-parse the emitted relations and recompute the fibers: the pattern
    # of singleton fibers must reproduce
    from curveclass.mpoly import GroebnerBasis, LEX
    from curveclass.parsing import format_poly, parse_poly
    from curveclass.functions import fiber_report
    from curveclass.curves import run_with_splits

    for build in (cusp_f, example2_f):
        f = build()
        pres = present_extension(f)
        reparsed = [parse_poly(format_poly(g), ("x", "y", "t")) for g in pres.relations]
        gb = GroebnerBasis(LEX, reparsed)
        for pt, val in zip(f.bad_points, f.assigned):
            def fn(refined, _of=pt.field, _v=val):
                v = None if _v is None else _of.transfer(_v, refined.field)
                return fiber_report(gb, refined, v)

            redone = [rep for _, rep in run_with_splits(pt, fn)]
            originals = [r for r in fiber_table(f)
                         if r.point.field._mp[0] == pt.field._mp[0]]
            assert sorted(r.distinct_complex for r in redone) == sorted(
                r.distinct_complex for r in originals
            )


def test_irrational_real_bad_points_with_index_locator():
    # q = x^2 - 2 on the cusp: one conjugacy class of size 4 containing the
    # two real points (sqrt2, +-2^(3/4)); the value is one tower element
    curve = make_curve(Y**2 - X**3)
    q = X**2 - 2
    from curveclass.curves import bad_locus

    pts = bad_locus(curve, q)
    assert len(pts) == 1
    (pt,) = pts
    assert pt.class_size == 4
    assert len(pt.embeddings) == 2
    assert (pt.class_size - len(pt.embeddings)) % 2 == 0
    f = make_function(curve, Y, q, [(0, 0)])
    ok, wit = is_integral(f)
    assert not ok  # y/(x^2-2) blows up along the curve at the bad class
    (rep,) = fiber_table(f)
    assert rep.distinct_complex == 0
    assert classify(f).verdicts["integral"] == "no"


def test_fiber_real_counts_over_irrational_points():
    # (y^2 - 2)/(x^3 - 2) is identically 1 on the cusp; over the bad class
    # (the six points with x^3 = 2, two of them real) the fiber is the
    # singleton {1}, so every verdict is yes when the assigned value is 1
    curve = make_curve(Y**2 - X**3)
    p, q = Y**2 - 2, X**3 - 2
    from curveclass.curves import bad_locus

    pts = bad_locus(curve, q)
    assert sum(pt.class_size for pt in pts) == 6
    (cls,) = pts
    assert len(cls.embeddings) == 2  # (2^(1/3), +-sqrt(2))
    f = make_function(curve, p, q, [(0, 1)])
    table = fiber_table(f)
    for r in table:
        assert r.distinct_complex == 1
        assert all(c == 1 for c in r.real_root_counts)
        assert r.matches_assigned
        for c in r.real_root_counts:
            assert (r.distinct_complex - c) % 2 == 0
    assert classify(f).verdicts == {
        "regular": "yes", "k_plus": "yes", "k_r_plus": "yes", "integral": "yes"
    }
    # a wrong value at the same class flips regularity and the closures
    g = make_function(curve, p, q, [(0, 0)])
    v = classify(g).verdicts
    assert v["regular"] == "no" and v["k_r_plus"] == "no" and v["integral"] == "yes"
