import os
import logging
import yaml
from dataclasses import dataclass, replace
from pathlib import Path

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).resolve().parent


@dataclass(frozen=True)
class Budget:
    """Resource caps; anything beyond them is reported as skipped, never as failed."""
    name: str = "default"
    max_faces_per_dim: int = 400_000
    max_facets: int = 200_000
    max_matrix_entries: int = 4_000_000
    max_dual_ground: int = 20
    prefilter_prime: int = 2**31 - 1
    prefilter_max_entries: int = 0
    brute_force_max_order: int = 24

    @classmethod
    def load(cls, budget_path: str) -> "Budget":
        path = Path(budget_path)
        if not path.exists():
            logger.error(f"Budget file not found: {path.resolve()}")
            raise FileNotFoundError(f"Budget file not found: {path}")

        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except Exception as e:
            logger.error(f"Failed to read or parse budget file '{path}': {e}")
            raise

        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        unknown = sorted(set(data) - set(known))
        if unknown:
            logger.warning(f"Ignoring unknown budget keys in '{path}': {unknown}")
        for key, value in known.items():
            if key != "name" and (not isinstance(value, int) or value < 0):
                raise ValueError(f"Budget field '{key}' must be a non-negative integer, got {value!r}")

        budget = cls(**known)
        logger.debug(f"Loaded budget '{budget.name}' from {path}")
        return budget

    def with_env_overrides(self) -> "Budget":
        overrides = {}
        for field_name, env_name in (
            ("max_faces_per_dim", "FOREST_MAX_FACES_PER_DIM"),
            ("max_facets", "FOREST_MAX_FACETS"),
            ("max_matrix_entries", "FOREST_MAX_MATRIX_ENTRIES"),
        ):
            raw = os.getenv(env_name)
            if raw:
                overrides[field_name] = int(raw)
        return replace(self, **overrides) if overrides else self


# --- Budget ---
BUDGET_FILE = os.getenv("FOREST_BUDGET_FILE", str(CONFIG_DIR / "budgets" / "default.yaml"))

# --- Suites ---
SUITE_DIR = Path(os.getenv("FOREST_SUITE_DIR", str(CONFIG_DIR / "suites")))
DEFAULT_SUITE = "paper"

# --- Random generation ---
# Recorded in output metadata so seeded corpora can be regenerated
PRNG_NAME = "numpy.random.PCG64"

# --- Verification ---
DEFAULT_JOBS = int(os.getenv("FOREST_JOBS", "1"))
RANDOM_GRAPH_COUNT = 100
RANDOM_GRAPH_MAX_ORDER = 9

budget = Budget.load(BUDGET_FILE).with_env_overrides()


def suite_path(name: str) -> Path:
    """A suite is either a path to a YAML manifest or the name of a bundled one."""
    candidate = Path(name)
    if candidate.suffix in (".yaml", ".yml") and candidate.exists():
        return candidate
    return SUITE_DIR / f"{name}.yaml"


def override_budget(**changes) -> Budget:
    """Replace fields of the active budget for the rest of this process (e.g. --budget-faces)."""
    global budget
    budget = replace(budget, **{k: v for k, v in changes.items() if v is not None})
    logger.debug(f"Active budget: {budget}")
    return budget
