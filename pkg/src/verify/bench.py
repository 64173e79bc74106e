import logging
import time
from dataclasses import dataclass
from typing import List

import numpy as np

from src.complexes.forest import forest_faces
from src.graphs.families import generate, parse_family
from src.homology.compute import reduced_homology
from src.verify.pipeline import parse_case

logger = logging.getLogger(__name__)


@dataclass
class BenchRow:
    case: str
    reps: int
    faces: int
    best: float
    median: float
    worst: float
    result: str


def bench_case(text: str, reps: int = 3) -> BenchRow:
    """Time the full homology computation of one `family:params:dK` case."""
    case = parse_case(text)
    g = generate(parse_family(case.family))
    faces = sum(len(fs) for fs in forest_faces(g, case.d, range(0, g.n + 1)).values())
    timings = []
    profile = None
    for _ in range(max(1, reps)):
        start = time.perf_counter()
        profile = reduced_homology(g, case.d)
        timings.append(time.perf_counter() - start)
    logger.info(f"Bench {text}: {faces} faces, median {np.median(timings):.3f}s")
    return BenchRow(
        case=text,
        reps=len(timings),
        faces=faces,
        best=float(np.min(timings)),
        median=float(np.median(timings)),
        worst=float(np.max(timings)),
        result=profile.describe(),
    )


def format_bench_table(rows: List[BenchRow]) -> str:
    width = max((len(r.case) for r in rows), default=4)
    lines = [f"{'case':<{width}}  {'reps':>4}  {'faces':>9}  {'min s':>8}  {'median s':>8}  {'max s':>8}  result"]
    for r in rows:
        lines.append(f"{r.case:<{width}}  {r.reps:>4}  {r.faces:>9}  {r.best:>8.3f}  {r.median:>8.3f}  "
                     f"{r.worst:>8.3f}  {r.result}")
    return "\n".join(lines) + "\n"
