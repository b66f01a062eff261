"""Built-in corpus replaying the worked examples, with the expected
verdict table; demo runs assert against it."""

from dataclasses import dataclass

from .jobs import JobSpec, run_classify, run_singular
from .report import ReportDocument


@dataclass
class DemoEntry:
    name: str
    job: object  # JobSpec | str (curve expression for singular-locus demos)
    expected: dict


CORPUS = [
    DemoEntry(
        name="cusp",
        job=JobSpec("y^2 - x^3", "y", "x", [{"point": ["0", "0"], "value": "0"}]),
        expected={
            "verdicts": {"regular": "no", "k_plus": "yes", "k_r_plus": "yes", "integral": "yes"},
            "integral_relation": "t^2 - x",
        },
    ),
    DemoEntry(
        name="glued-cusp-pair",
        job=JobSpec(
            "y^2 - x^3*(x^2+1)^2",
            "y",
            "x*(x^2+1)",
            [{"point": ["0", "0"], "value": "0"}],
        ),
        expected={
            "verdicts": {"regular": "no", "k_plus": "no", "k_r_plus": "yes", "integral": "yes"},
            "integral_relation": "t^2 - x",
        },
    ),
    DemoEntry(
        name="quadruple-contact",
        job=JobSpec(
            "y^4 - x*(x^2+y^2)", "y^2", "x", [{"point": ["0", "0"], "value": "0"}]
        ),
        expected={
            "verdicts": {"regular": "no", "k_plus": "no", "k_r_plus": "no", "integral": "yes"},
            "integral_relation": "t^2 - t - x",
        },
    ),
    DemoEntry(
        name="cubic-with-complex-fiber",
        job=JobSpec(
            "y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)",
            "y",
            "x",
            [{"point": ["0", "0"], "value": "0"}],
        ),
        expected={
            "verdicts": {"regular": "no", "k_plus": "no", "k_r_plus": "no", "integral": "yes"},
            # t^3 - x t^2 + t (x+1) - x (x+1), in canonical term order
            "integral_relation": "t^3 - t^2*x + t*x - x^2 + t - x",
            "fiber_origin": {"distinct_complex": 3, "distinct_real": 1},
        },
    ),
    DemoEntry(
        name="node-wrong-value",
        job=JobSpec(
            "y^2 - x^2*(x+1)", "y", "x", [{"point": ["0", "0"], "value": "1"}]
        ),
        expected={
            "verdicts": {"regular": "no", "k_plus": "no", "k_r_plus": "no", "integral": "yes"},
            "integral_relation": "t^2 - x - 1",
        },
    ),
    DemoEntry(
        name="seven-singularities",
        job="(y^4 + x^6)*(y^2 - (x-1)^3*(x-2)^2*(x^2+1)^2*(x^2+4)^3)",
        expected={
            "real_singular_points": ["(0, 0)", "(1, 0)", "(2, 0)"],
            "nonreal_m1_factors": ["x^2 + 1", "x^2 + 4"],
            "min_closed_points": 7,
        },
    ),
]


def run_demo(probe=False):
    """Replay the corpus; returns (entry, document, passed, failures)."""
    results = []
    for entry in CORPUS:
        if isinstance(entry.job, str):
            doc = run_singular(entry.job)
            passed, failures = _check_singular(doc, entry.expected)
        else:
            job = entry.job
            if probe:
                job = JobSpec(job.curve_expr, job.num_expr, job.den_expr,
                              job.assignments, job.realness_budget, True)
            doc = run_classify(job)
            passed, failures = _check_classification(doc, entry.expected)
        results.append((entry, doc, passed, failures))
    return results


def _check_classification(doc: ReportDocument, expected):
    failures = []
    for name, want in expected["verdicts"].items():
        got = doc.data["verdicts"][name]
        if got != want:
            failures.append(f"verdict {name}: expected {want}, got {got}")
    want_rel = expected.get("integral_relation")
    got_rel = doc.data["certificates"]["integral_relation"]
    if want_rel is not None and got_rel != want_rel:
        failures.append(f"integral relation: expected {want_rel}, got {got_rel}")
    fib = expected.get("fiber_origin")
    if fib:
        row = next(r for r in doc.data["fibers"] if r["point"] == "(0, 0)")
        for key, want in fib.items():
            if row[key] != want:
                failures.append(f"fiber at origin {key}: expected {want}, got {row[key]}")
    return not failures, failures


def _check_singular(doc: ReportDocument, expected):
    failures = []
    rows = doc.data["singular_points"]
    real = sorted(r["point"] for r in rows if r["real"])
    for want in expected["real_singular_points"]:
        if want not in real:
            failures.append(f"missing real singular point {want}")
    extra_real = [p for p in real if p not in expected["real_singular_points"]]
    if extra_real:
        failures.append(f"unexpected real singular points: {extra_real}")
    nonreal_blob = " ".join(r["point"] for r in rows if not r["real"])
    for want in expected["nonreal_m1_factors"]:
        if want not in nonreal_blob:
            failures.append(f"missing non-real class over {want}")
    total = sum(r["class_size"] for r in rows)
    if total < expected["min_closed_points"]:
        failures.append(f"only {total} closed points, expected >= "
                        f"{expected['min_closed_points']}")
    return not failures, failures
