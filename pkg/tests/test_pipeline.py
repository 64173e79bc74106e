import pytest

from src.config import settings
from src.verify.bench import bench_case, format_bench_table
from src.verify.cases import FAIL, PASS, SKIPPED, VACUOUS, CaseReport, summarize
from src.verify.manifest import filter_cases, load_suite
from src.verify.pipeline import VerificationPipeline, exit_code, parse_case, run_case, text_report
from src.utils.errors import InputError

MANIFEST = """
name: small
cases:
  - {catalog: cycle, family: "cycle:{n}", params: {n: "3..5"}, d: [0, inf]}
  - {catalog: cycle, family: "cycle:5", d: [inf]}
"""


def test_parse_case():
    case = parse_case("knxkm:3,3:d2")
    assert case.id == "knxkm/knxkm:3,3/d2"
    assert case.catalog == "knxkm"
    assert parse_case("bowtie:dinf", "cactus-dual").id == "cactus-dual/bowtie/dinf"
    with pytest.raises(InputError):
        parse_case("cycle:5")


def test_run_case_skips_outside_range():
    report = run_case(parse_case("doublestar:2,2:d0"))
    assert report.verdict == SKIPPED
    assert report.reason == "outside-range"


def test_run_case_skips_over_budget():
    settings.override_budget(max_faces_per_dim=2)
    report = run_case(parse_case("complete:4:d1"))
    assert report.verdict == SKIPPED
    assert report.reason == "resource"
    assert report.expected is not None


def test_exit_code():
    ok, skipped, failed = CaseReport("a", PASS), CaseReport("b", SKIPPED, notes=["resource: x"]), CaseReport("c", FAIL)
    assert exit_code([ok, skipped]) == 0
    assert exit_code([ok, skipped], strict=True) == 3
    assert exit_code([ok, skipped, failed], strict=True) == 1
    assert exit_code([]) == 0


def test_pipeline_counts_and_report():
    cases = [parse_case("doublestar:2,2:d0"), parse_case("cycle:5:d1")]
    results = VerificationPipeline(cases, title="mixed").run_analysis()
    assert results["counts"] == {PASS: 1, FAIL: 0, SKIPPED: 1, VACUOUS: 0}
    assert [r.id for r in results["reports"]] == ["cycle/cycle:5/d1", "double-star/doublestar:2,2/d0"]
    text = results["text_report"]
    assert text.startswith("Verification Report for: mixed")
    assert "1 passed, 0 failed, 1 skipped, 0 vacuous" in text


def test_vacuous_passes_are_counted_apart():
    vacuous = CaseReport("bridge-invariance/cycle:5/dinf", PASS, notes=["vacuous: no bridges"])
    plain = CaseReport("cycle/cycle:5/d1", PASS, notes=["observed contractible"])
    counts = summarize([vacuous, plain, CaseReport("c", SKIPPED, notes=["vacuous: not a skip"])])
    assert counts == {PASS: 2, FAIL: 0, SKIPPED: 1, VACUOUS: 1}
    assert vacuous.vacuous and not plain.vacuous
    assert "2 passed, 0 failed, 0 skipped, 1 vacuous" in text_report("props", [vacuous, plain])
    assert exit_code([vacuous], strict=True) == 0


def test_text_report_shows_witness_for_failures():
    report = CaseReport("p/g/d1", FAIL, witness="bridge (0, 1)")
    assert "bridge (0, 1)" in text_report("t", [report])


def test_report_json_timings():
    report = run_case(parse_case("cycle:5:d1"))
    assert "wall_time" not in report.to_json_dict()
    assert "wall_time" in report.to_json_dict(timings=True)
    assert report.to_json_dict()["reason"] is None


def test_manifest_expansion(tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text(MANIFEST)
    cases = load_suite(str(path))
    assert [c.id for c in cases] == [
        "cycle/cycle:3/d0", "cycle/cycle:3/dinf",
        "cycle/cycle:4/d0", "cycle/cycle:4/dinf",
        "cycle/cycle:5/d0", "cycle/cycle:5/dinf",
    ]
    assert len(filter_cases(cases, max_r=4)) == 4
    assert [c.id for c in filter_cases(cases, pattern="cycle:5/d0")] == ["cycle/cycle:5/d0"]


def test_manifest_rejects_unknown_catalog(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("cases:\n  - {catalog: nonsense, family: \"cycle:4\"}\n")
    with pytest.raises(InputError):
        load_suite(str(path))


def test_bundled_suite_loads():
    cases = load_suite("paper")
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids))
    assert "rp2/rp2/d0" in ids
    assert all(parse_case(f"{c.family}:d{c.d}", c.catalog).id == c.id for c in cases[:20])


def test_bench_case():
    row = bench_case("cycle:5:d1", reps=2)
    assert row.faces == 21
    assert row.reps == 2
    assert row.result == "H1=Z"
    assert row.best <= row.median <= row.worst
    assert "median s" in format_bench_table([row])
