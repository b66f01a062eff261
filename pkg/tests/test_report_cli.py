import json
import subprocess
import sys

from curveclass.demo import run_demo
from curveclass.jobs import JobSpec, MorphismJob, run_check_morphism, run_classify, run_present
from curveclass.report import emit, parse_machine


def cusp_job(**kw):
    return JobSpec("y^2 - x^3", "y", "x", [{"point": ["0", "0"], "value": "0"}], **kw)


def example3_job():
    return JobSpec("y^4 - x*(x^2+y^2)", "y^2", "x", [{"point": ["0", "0"], "value": "0"}])


def test_machine_contains_certificate():
    doc = run_classify(cusp_job())
    text = emit(doc, "machine")
    assert '"integral_relation": "t^2 - x"' in text


def test_example3_fiber_row():
    doc = run_classify(example3_job())
    assert doc.data["fibers"][0]["distinct_real"] == 2
    assert doc.data["fibers"][0]["distinct_complex"] == 2


def test_machine_round_trip_byte_identical():
    for job in (cusp_job(), example3_job()):
        doc = run_classify(job)
        text = emit(doc, "machine")
        again = emit(parse_machine(text), "machine")
        assert text == again


def test_identical_jobs_identical_output():
    a = emit(run_classify(cusp_job()), "machine")
    b = emit(run_classify(cusp_job()), "machine")
    assert a == b


def test_human_output_mentions_verdicts():
    text = emit(run_classify(cusp_job()), "human")
    assert "k_r_plus" in text and "yes" in text
    assert "P(t) = t^2 - x" in text


def test_present_document():
    doc = run_present(cusp_job())
    pres = doc.data["presentation"]
    assert pres["birational"] is True
    assert pres["integral_relation"] == "t^2 - x"
    assert "t^2 - x" in pres["relations"]


def test_morphism_document():
    doc = run_check_morphism(
        MorphismJob.from_dict(
            {"curve": "y^2 - x^2*(x+1)", "map": ["t^2 - 1", "t^3 - t"], "function": "t"}
        )
    )
    assert doc.data["finite"] is True
    assert doc.data["constant_on_real_fibers"] is False
    (w,) = doc.data["witnesses"]
    assert w["point"] == "(0, 0)"
    vals = {entry["value"] for entry in w["fiber_values"]}
    assert vals == {"1", "-1"}


def _run_cli(args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "curveclass.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
        cwd="/root/pkg",
    )


def test_cli_classify_machine_deterministic(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "curve": "y^2 - x^3",
                "numerator": "y",
                "denominator": "x",
                "assignments": [{"point": ["0", "0"], "value": "0"}],
            }
        )
    )
    r1 = _run_cli(["classify", "--input", str(job), "--format", "machine"])
    r2 = _run_cli(["classify", "--input", str(job), "--format", "machine"])
    assert r1.returncode == 0 and r2.returncode == 0
    assert r1.stdout == r2.stdout
    data = json.loads(r1.stdout)
    assert data["verdicts"] == {
        "regular": "no", "k_plus": "yes", "k_r_plus": "yes", "integral": "yes"
    }


def test_cli_verdict_no_is_exit_zero(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "curve": "y^4 - x*(x^2+y^2)",
                "numerator": "y^2",
                "denominator": "x",
                "assignments": [{"point": ["0", "0"], "value": "0"}],
            }
        )
    )
    r = _run_cli(["classify", "--input", str(job)])
    assert r.returncode == 0
    assert "no" in r.stdout


def test_cli_nonsquarefree_curve_error_code(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "curve": "(y - x)^2",
                "numerator": "y",
                "denominator": "x",
                "assignments": [],
            }
        )
    )
    r = _run_cli(["classify", "--input", str(job)])
    assert r.returncode == 3
    assert "repeated factor" in r.stderr


def test_cli_missing_assignment_error_code(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {"curve": "y^2 - x^3", "numerator": "y", "denominator": "x", "assignments": []}
        )
    )
    r = _run_cli(["classify", "--input", str(job)])
    assert r.returncode == 5
    assert "missing value at (0, 0)" in r.stderr


def test_cli_parse_error_code(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {"curve": "2x + y", "numerator": "y", "denominator": "x", "assignments": []}
        )
    )
    r = _run_cli(["classify", "--input", str(job)])
    assert r.returncode == 2


def test_cli_batch_mode(tmp_path):
    jobs = [
        {
            "curve": "y^2 - x^3",
            "numerator": "y",
            "denominator": "x",
            "assignments": [{"point": ["0", "0"], "value": "0"}],
        },
        {
            "curve": "y^2 - x^2*(x+1)",
            "numerator": "y",
            "denominator": "x",
            "assignments": [{"point": ["0", "0"], "value": "1"}],
        },
    ]
    path = tmp_path / "batch.json"
    path.write_text(json.dumps(jobs))
    r = _run_cli(["classify", "--input", str(path), "--batch", "--format", "machine"])
    assert r.returncode == 0
    docs = json.loads(r.stdout)
    assert len(docs) == 2
    assert docs[0]["verdicts"]["k_r_plus"] == "yes"
    assert docs[1]["verdicts"]["k_r_plus"] == "no"


def test_cli_fibers_subcommand(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "curve": "y^2 - x^3*(x^2+1)^2",
                "numerator": "y",
                "denominator": "x*(x^2+1)",
                "assignments": [{"point": ["0", "0"], "value": "0"}],
            }
        )
    )
    r = _run_cli(["fibers", "--input", str(job), "--format", "machine"])
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert "verdicts" not in data
    assert len(data["fibers"]) == 2


def test_cli_demo_passes():
    r = _run_cli(["demo"])
    assert r.returncode == 0
    assert r.stdout.count("PASS") == 6


def test_demo_library_assertions():
    results = run_demo()
    assert all(passed for _, _, passed, _ in results)


def test_cli_check_morphism_human(tmp_path):
    job = tmp_path / "m.json"
    job.write_text(
        json.dumps(
            {"curve": "y^2 - x^2*(x+1)", "map": ["t^2 - 1", "t^3 - t"], "function": "t"}
        )
    )
    r = _run_cli(["check-morphism", "--input", str(job)])
    assert r.returncode == 0
    assert "constant on real fibers  no" in r.stdout
    assert "witness at (0, 0)" in r.stdout
