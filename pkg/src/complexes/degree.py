from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Union

from src.utils.errors import InputError


@total_ordering
@dataclass(frozen=True)
class DegreeBound:
    """Degree cap d for induced forests. cap=None stands for no bound at all.

    Ordered 0 < 1 < 2 < ... < unbounded.
    """
    cap: Optional[int] = None

    def __post_init__(self):
        if self.cap is not None and self.cap < 0:
            raise InputError(f"Degree bound must be non-negative, got {self.cap}")

    @classmethod
    def parse(cls, text: Union[str, int, "DegreeBound"]) -> "DegreeBound":
        if isinstance(text, DegreeBound):
            return text
        value = str(text).strip().lower()
        if value in ("inf", "infinity", "unbounded", "∞"):
            return UNBOUNDED
        try:
            return cls(int(value))
        except ValueError as e:
            raise InputError(f"Degree bound must be a non-negative integer or 'inf', got {text!r}") from e

    @property
    def is_unbounded(self) -> bool:
        return self.cap is None

    def allows(self, degree: int) -> bool:
        return self.cap is None or degree <= self.cap

    def at_least(self, value: int) -> bool:
        """True when every degree <= value is allowed, i.e. the cap does not bind below value."""
        return self.cap is None or self.cap >= value

    def succ(self) -> "DegreeBound":
        return self if self.cap is None else DegreeBound(self.cap + 1)

    def _key(self):
        return float("inf") if self.cap is None else self.cap

    def __lt__(self, other):
        if not isinstance(other, DegreeBound):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        return "inf" if self.cap is None else str(self.cap)


UNBOUNDED = DegreeBound(None)


def finite(d: int) -> DegreeBound:
    return DegreeBound(d)
