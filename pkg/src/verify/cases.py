import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.complexes.degree import DegreeBound
from src.homology.compute import DimWindow
from src.homology.profile import HomologyGroup, HomologyProfile, WedgeDescriptor

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
# a passing property run whose hypotheses never held; counted apart, never a verdict
VACUOUS = "vacuous"

PRIMAL = "primal"
DUAL = "dual"


@dataclass(frozen=True)
class Mismatch:
    dimension: int
    expected: str
    got: str

    def to_json_dict(self) -> Dict[str, Any]:
        return {"dimension": self.dimension, "expected": self.expected, "got": self.got}


class Expectation:
    """What a closed form predicts for a profile; subclasses define the comparison."""
    window: Optional[DimWindow] = None
    target: str = PRIMAL

    def check(self, profile: HomologyProfile) -> Optional[Mismatch]:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def to_json_dict(self) -> Dict[str, Any]:
        return {"kind": type(self).__name__, "description": self.describe()}


@dataclass
class ExactProfile(Expectation):
    profile: HomologyProfile
    target: str = PRIMAL

    def check(self, profile: HomologyProfile) -> Optional[Mismatch]:
        q = self.profile.first_difference(profile)
        if q is None:
            return None
        return Mismatch(q, str(self.profile.group(q)), str(profile.group(q)))

    def describe(self) -> str:
        return self.profile.describe()


@dataclass
class Wedge(ExactProfile):
    """Homology of a wedge of spheres; spheres[q] copies of S^q."""
    spheres: Dict[int, int] = field(default_factory=dict)

    @classmethod
    def of(cls, spheres: Dict[int, int], target: str = PRIMAL) -> "Wedge":
        spheres = {q: n for q, n in spheres.items() if n}
        return cls(profile=HomologyProfile.from_wedge(spheres), target=target, spheres=spheres)

    def describe(self) -> str:
        return str(WedgeDescriptor(self.spheres))


def contractible() -> Wedge:
    return Wedge.of({})


def sphere(q: int, copies: int = 1) -> Wedge:
    return Wedge.of({q: copies})


@dataclass
class SphereAtLeast(Expectation):
    """Either all reduced homology vanishes, or it is a single Z in some dimension >= floor."""
    floor: int

    def check(self, profile: HomologyProfile) -> Optional[Mismatch]:
        nonzero = profile.nonzero_dims()
        if not nonzero:
            return None
        q = nonzero[0]
        lowest_ok = q >= self.floor and profile.group(q) == HomologyGroup(1)
        if lowest_ok and len(nonzero) == 1:
            return None
        bad = nonzero[1] if lowest_ok else q
        return Mismatch(bad, f"0, or a single Z in dimension >= {self.floor}", str(profile.group(bad)))

    def describe(self) -> str:
        return f"contractible or S^k with k >= {self.floor}"


@dataclass
class TorsionExpected(Expectation):
    """Some dimension inside the window carries torsion divisible by `factor`."""
    factor: int
    window: Optional[DimWindow] = None

    def check(self, profile: HomologyProfile) -> Optional[Mismatch]:
        lo, hi = self.window
        for q in range(lo, hi + 1):
            if any(t % self.factor == 0 for t in profile.torsion(q)):
                return None
        return Mismatch(lo, f"Z/{self.factor} summand in dimensions {lo}..{hi}", profile.restricted(lo, hi).describe())

    def describe(self) -> str:
        lo, hi = self.window
        return f"torsion divisible by {self.factor} in dimensions {lo}..{hi}"


@dataclass
class Informational(Expectation):
    """No claim; the computed profile is recorded only."""
    reason: str = ""
    window: Optional[DimWindow] = None

    def check(self, profile: HomologyProfile) -> Optional[Mismatch]:
        return None

    def describe(self) -> str:
        return f"no claim ({self.reason})" if self.reason else "no claim"


@dataclass(frozen=True)
class TheoremCase:
    id: str
    catalog: str
    family: str
    d: DegreeBound

    def to_json_dict(self) -> Dict[str, Any]:
        return {"id": self.id, "catalog": self.catalog, "family": self.family, "d": str(self.d)}


def case_id(catalog: str, family: str, d: DegreeBound) -> str:
    return f"{catalog}/{family}/d{d}"


@dataclass
class CaseReport:
    id: str
    verdict: str
    expected: Optional[str] = None
    got: Optional[HomologyProfile] = None
    mismatch: Optional[Mismatch] = None
    witness: Optional[str] = None
    notes: List[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def vacuous(self) -> bool:
        return self.verdict == PASS and bool(self.notes) and self.notes[0].startswith(f"{VACUOUS}:")

    @property
    def reason(self) -> Optional[str]:
        """Skip category (`resource` or `outside-range`) taken from the first note."""
        if self.verdict != SKIPPED or not self.notes:
            return None
        return self.notes[0].split(":", 1)[0]

    def to_json_dict(self, timings: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "id": self.id,
            "verdict": self.verdict,
            "expected": self.expected,
            "got": self.got.to_json_dict() if self.got is not None else None,
            "mismatch": self.mismatch.to_json_dict() if self.mismatch is not None else None,
            "witness": self.witness,
            "notes": list(self.notes),
            "reason": self.reason,
        }
        if timings:
            data["wall_time"] = round(self.wall_time, 6)
        return data


def summarize(reports: List[CaseReport]) -> Dict[str, int]:
    """Verdict counts; vacuous passes are also counted among the passes."""
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0, VACUOUS: 0}
    for report in reports:
        counts[report.verdict] = counts.get(report.verdict, 0) + 1
        counts[VACUOUS] += report.vacuous
    return counts


def sorted_reports(reports: List[CaseReport]) -> List[CaseReport]:
    return sorted(reports, key=lambda r: r.id)
