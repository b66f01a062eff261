"""Job specifications and the classification pipeline they drive."""

import time
from dataclasses import dataclass

from .curves import make_curve, make_parametrization, fiber_constancy_check
from .errors import JobError
from .functions import classify, make_function, present_extension, probe_function
from .parsing import format_point, format_poly, format_value, parse_poly, parse_upoly
from .report import (
    ReportDocument,
    classification_document,
    morphism_document,
    presentation_document,
    singular_locus_document,
)


@dataclass
class JobSpec:
    curve_expr: str
    num_expr: str
    den_expr: str
    assignments: list  # of {"point": [x, y], "value": expr} or {"index": i, ...}
    realness_budget: int = 64
    probe: bool = False

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(
                curve_expr=d["curve"],
                num_expr=d["numerator"],
                den_expr=d["denominator"],
                assignments=list(d.get("assignments", [])),
                realness_budget=int(d.get("realness_budget", 64)),
                probe=bool(d.get("probe", False)),
            )
        except KeyError as missing:
            raise JobError(f"job is missing the {missing} field")


def _parse_locator_value(entry):
    if "index" in entry:
        locator = int(entry["index"])
    elif "point" in entry:
        px, py = entry["point"]
        locator = (_parse_rational(px), _parse_rational(py))
    else:
        raise JobError("assignment needs a 'point' or an 'index'")
    value = parse_poly(str(entry["value"]), ("x", "y"))
    return locator, value


def _parse_rational(text):
    p = parse_poly(str(text), ())
    return p.constant_value()


def _echo(job: JobSpec):
    """Canonicalized echo of the job (stable across reruns)."""
    curve = parse_poly(job.curve_expr)
    p = parse_poly(job.num_expr)
    q = parse_poly(job.den_expr)
    assignments = []
    for entry in job.assignments:
        locator, value = _parse_locator_value(entry)
        if isinstance(locator, int):
            point = f"#{locator}"
        else:
            point = f"({format_value(locator[0])}, {format_value(locator[1])})"
        assignments.append({"point": point, "value": format_poly(value)})
    return curve, p, q, {
        "curve": format_poly(curve),
        "numerator": format_poly(p),
        "denominator": format_poly(q),
        "assignments": assignments,
    }


def build_function(job: JobSpec):
    curve_poly, p, q, echo = _echo(job)
    curve = make_curve(curve_poly)
    pairs = [_parse_locator_value(e) for e in job.assignments]
    f = make_function(curve, p, q, pairs)
    return f, echo


def run_classify(job: JobSpec) -> ReportDocument:
    """Full pipeline: curve validation, realness certification, function
    validation, classification, optional continuity probe."""
    t0 = time.monotonic()
    f, echo = build_function(job)
    rep = classify(f, realness_budget=job.realness_budget)
    probe = None
    if job.probe:
        raw = probe_function(f)
        probe = {
            "outcome": raw["outcome"],
            "points": [
                {"point": format_point(pt), "outcome": r["outcome"]}
                for pt, r in raw.get("points", [])
            ],
        }
    return classification_document(echo, rep, probe=probe, timing=time.monotonic() - t0)


def run_present(job: JobSpec) -> ReportDocument:
    t0 = time.monotonic()
    f, echo = build_function(job)
    pres = present_extension(f)
    return presentation_document(echo, pres, timing=time.monotonic() - t0)


def run_singular(curve_expr: str, realness_budget=64) -> ReportDocument:
    t0 = time.monotonic()
    curve_poly = parse_poly(curve_expr)
    curve = make_curve(curve_poly)
    pts = curve.singular_locus()
    realness = curve.realness(realness_budget)
    caveats = []
    if not realness.certified:
        for factor, status, note in realness.factors:
            if status != "certified":
                caveats.append(f"realness unverified for a curve factor ({note})")
    return singular_locus_document(
        format_poly(curve_poly), pts, caveats, timing=time.monotonic() - t0
    )


@dataclass
class MorphismJob:
    curve_expr: str
    u_expr: str
    v_expr: str
    p_expr: str = "t"

    @classmethod
    def from_dict(cls, d):
        try:
            u, v = d["map"]
            return cls(curve_expr=d["curve"], u_expr=u, v_expr=v,
                       p_expr=d.get("function", "t"))
        except (KeyError, ValueError):
            raise JobError("morphism job needs 'curve' and 'map': [u, v]")


def run_check_morphism(job: MorphismJob) -> ReportDocument:
    t0 = time.monotonic()
    curve = make_curve(parse_poly(job.curve_expr))
    u = parse_upoly(job.u_expr, "t")
    v = parse_upoly(job.v_expr, "t")
    p = parse_upoly(job.p_expr, "t")
    pi = make_parametrization(curve, u, v)
    result = fiber_constancy_check(pi, p)
    echo = {
        "curve": format_poly(curve.F),
        "map": [job.u_expr, job.v_expr],
        "function": job.p_expr,
    }
    return morphism_document(echo, result, timing=time.monotonic() - t0)
