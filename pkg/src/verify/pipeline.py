import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from src.complexes.complex import alexander_dual
from src.complexes.degree import DegreeBound
from src.complexes.forest import forest_complex
from src.graphs.families import generate, parse_family
from src.graphs.graph import Graph
from src.homology.compute import reduced_homology, reduced_homology_of_complex
from src.homology.profile import HomologyProfile
from src.verify.cases import (
    DUAL, FAIL, PASS, SKIPPED, VACUOUS, CaseReport, Expectation, Informational, SphereAtLeast, TheoremCase, case_id,
    sorted_reports, summarize,
)
from src.verify.catalog import catalog_for_family, catalog_remark, expectation_for
from src.utils.errors import CapacityError, InputError

logger = logging.getLogger(__name__)


def compute_profile(expectation: Expectation, g: Graph, d: DegreeBound) -> HomologyProfile:
    if expectation.target == DUAL:
        return reduced_homology_of_complex(alexander_dual(forest_complex(g, d)))
    return reduced_homology(g, d, expectation.window)


def run_case(case: TheoremCase) -> CaseReport:
    """Evaluate one catalog case; never raises for range or budget problems."""
    start = time.perf_counter()
    logger.info(f"Case {case.id} started")
    try:
        g = generate(parse_family(case.family))
        expectation = expectation_for(case, g)
    except InputError as e:
        logger.warning(f"{case.id} skipped: {e}")
        return CaseReport(case.id, SKIPPED, notes=[f"outside-range: {e}"], wall_time=time.perf_counter() - start)

    try:
        profile = compute_profile(expectation, g, case.d)
    except CapacityError as e:
        logger.warning(f"{case.id} skipped: {e}")
        return CaseReport(case.id, SKIPPED, expected=expectation.describe(), notes=[f"resource: {e}"],
                          wall_time=time.perf_counter() - start)

    mismatch = expectation.check(profile)
    notes = []
    if isinstance(expectation, SphereAtLeast):
        nonzero = profile.nonzero_dims()
        notes.append(f"observed sphere dimension {nonzero[0]}" if nonzero else "observed contractible")
    elif isinstance(expectation, Informational):
        notes.append(expectation.describe())
    if catalog_remark(case.catalog):
        notes.append(f"remark: {catalog_remark(case.catalog)}")
    verdict = PASS if mismatch is None else FAIL
    elapsed = time.perf_counter() - start
    logger.info(f"Case {case.id} finished: {verdict} in {elapsed:.2f}s")
    return CaseReport(case.id, verdict, expected=expectation.describe(), got=profile, mismatch=mismatch,
                      notes=notes, wall_time=elapsed)


class VerificationPipeline:
    def __init__(self, cases: List[TheoremCase], jobs: int = 1, title: str = "suite"):
        self.cases = cases
        self.jobs = max(1, jobs)
        self.title = title

    def run_analysis(self) -> Dict[str, Any]:
        logger.info(f"Pipeline started for {self.title}: {len(self.cases)} cases, {self.jobs} job(s)")
        results: Dict[str, Any] = {}

        if self.jobs > 1 and len(self.cases) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                reports = list(pool.map(run_case, self.cases))
        else:
            reports = [run_case(case) for case in self.cases]

        results["reports"] = sorted_reports(reports)
        results["counts"] = summarize(reports)
        results["text_report"] = text_report(self.title, results["reports"])
        logger.info(f"Pipeline finished: {results['counts']}")
        return results


def text_report(title: str, reports: List[CaseReport]) -> str:
    report_parts = [f"Verification Report for: {title}\n{'=' * 40}\n"]
    width = max((len(r.id) for r in reports), default=10)
    for report in reports:
        detail = ""
        if report.verdict == FAIL and report.mismatch is not None:
            m = report.mismatch
            detail = f"dim {m.dimension}: expected {m.expected}, got {m.got}"
        elif report.verdict == FAIL and report.witness:
            detail = report.witness
        elif report.verdict == SKIPPED:
            detail = "; ".join(report.notes)
        elif report.got is not None:
            detail = report.got.describe()
        report_parts.append(f"{report.id:<{width}}  {report.verdict:<7}  {detail}\n")
    counts = summarize(reports)
    report_parts.append(f"{'-' * 40}\n{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped, "
                        f"{counts[VACUOUS]} vacuous\n")
    return "".join(report_parts)


def exit_code(reports: List[CaseReport], strict: bool = False) -> int:
    counts = summarize(reports)
    if counts[FAIL]:
        return 1
    if strict and counts[SKIPPED]:
        return 3
    return 0


def parse_case(text: str, catalog: Optional[str] = None) -> TheoremCase:
    """`family:params:dK` as used by the bench command, e.g. knxkm:3,3:d2."""
    family, sep, bound = text.rpartition(":")
    if not sep or not bound.startswith("d"):
        raise InputError(f"Case must look like 'family:params:dK', got {text!r}")
    d = DegreeBound.parse(bound[1:])
    spec = parse_family(family)
    key = catalog or catalog_for_family(spec.name)
    return TheoremCase(case_id(key, str(spec), d), key, str(spec), d)
