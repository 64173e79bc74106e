import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from src.homology.snf import normalize_invariant_factors
from src.utils.errors import InputError


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti plus the finite cyclic groups Z/t for t in torsion (an invariant-factor chain)."""
    betti: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise InputError(f"Betti number must be non-negative, got {self.betti}")
        object.__setattr__(self, "torsion", normalize_invariant_factors(self.torsion))

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __add__(self, other: "HomologyGroup") -> "HomologyGroup":
        return HomologyGroup(self.betti + other.betti, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO = HomologyGroup()


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology by dimension. Missing dimensions are the zero group."""
    groups: Dict[int, HomologyGroup] = field(default_factory=dict)

    def group(self, q: int) -> HomologyGroup:
        return self.groups.get(q, ZERO)

    def betti(self, q: int) -> int:
        return self.group(q).betti

    def torsion(self, q: int) -> Tuple[int, ...]:
        return self.group(q).torsion

    @property
    def dims(self) -> List[int]:
        return sorted(self.groups)

    def nonzero_dims(self) -> List[int]:
        return [q for q in self.dims if not self.groups[q].is_zero()]

    def is_zero(self) -> bool:
        return not self.nonzero_dims()

    def has_torsion(self) -> bool:
        return any(g.torsion for g in self.groups.values())

    def euler(self) -> int:
        """Reduced Euler characteristic from the Betti numbers."""
        return sum((-1) ** (q % 2) * g.betti for q, g in self.groups.items())

    def restricted(self, lo: int, hi: int) -> "HomologyProfile":
        return HomologyProfile({q: g for q, g in self.groups.items() if lo <= q <= hi})

    def shifted(self, k: int) -> "HomologyProfile":
        return HomologyProfile({q + k: g for q, g in self.groups.items()})

    def __add__(self, other: "HomologyProfile") -> "HomologyProfile":
        merged = dict(self.groups)
        for q, g in other.groups.items():
            merged[q] = merged.get(q, ZERO) + g
        return HomologyProfile(merged)

    def first_difference(self, other: "HomologyProfile", dims: Optional[Iterable[int]] = None) -> Optional[int]:
        """Smallest dimension where the two profiles differ (absent counts as zero), else None."""
        candidates = sorted(set(self.groups) | set(other.groups)) if dims is None else sorted(dims)
        for q in candidates:
            if self.group(q) != other.group(q):
                return q
        return None

    def same_as(self, other: "HomologyProfile") -> bool:
        return self.first_difference(other) is None

    def describe(self) -> str:
        nonzero = self.nonzero_dims()
        if not nonzero:
            return "0"
        return ", ".join(f"H{q}={self.groups[q]}" for q in nonzero)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "dims": {str(q): {"betti": g.betti, "torsion": list(g.torsion)} for q, g in sorted(self.groups.items())},
            "euler": self.euler(),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Any]) -> "HomologyProfile":
        try:
            return cls({
                int(q): HomologyGroup(int(g["betti"]), tuple(int(t) for t in g.get("torsion", ())))
                for q, g in data["dims"].items()
            })
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed homology profile: {e}") from e

    @classmethod
    def from_wedge(cls, spheres: Mapping[int, int]) -> "HomologyProfile":
        """Profile of a wedge with spheres[q] copies of S^q (q = -1 means the empty complex)."""
        return cls({q: HomologyGroup(count) for q, count in spheres.items() if count})

    @classmethod
    def empty_complex(cls) -> "HomologyProfile":
        return cls({-1: HomologyGroup(1)})


@dataclass(frozen=True)
class WedgeDescriptor:
    spheres: Dict[int, int]

    def to_profile(self) -> HomologyProfile:
        return HomologyProfile.from_wedge(self.spheres)

    def __str__(self) -> str:
        if not self.spheres:
            return "contractible"
        return " v ".join(f"S^{q}" if n == 1 else f"{n}*S^{q}" for q, n in sorted(self.spheres.items()))


@dataclass(frozen=True)
class WedgeRejection:
    dimension: int
    reason: str


def profile_as_wedge(p: HomologyProfile) -> Union[WedgeDescriptor, WedgeRejection]:
    """The wedge of spheres with the same homology: torsion-free, connected and nonempty."""
    for q in (-1, 0):
        if p.group(q).betti:
            what = "empty complex" if q == -1 else "disconnected complex"
            return WedgeRejection(q, f"{what}: H_{q} = {p.group(q)}")
    for q in p.dims:
        if p.groups[q].torsion:
            return WedgeRejection(q, f"torsion {p.groups[q]} in dimension {q}")
    return WedgeDescriptor({q: p.groups[q].betti for q in p.dims if p.groups[q].betti})


def homological_connectivity(p: HomologyProfile) -> Union[int, float]:
    """Largest k with H_q = 0 for all q <= k; math.inf when everything vanishes."""
    nonzero = p.nonzero_dims()
    if not nonzero:
        return math.inf
    return nonzero[0] - 1
