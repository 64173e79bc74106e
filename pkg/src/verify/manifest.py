import itertools
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import yaml

from src.complexes.degree import DegreeBound
from src.config import settings
from src.graphs.families import generate, parse_family
from src.verify.cases import TheoremCase, case_id
from src.verify.catalog import CATALOG
from src.utils.errors import InputError

logger = logging.getLogger(__name__)


def _values(raw: Any) -> List[int]:
    """An int, a list of ints, or an inclusive range written 'a..b'."""
    if isinstance(raw, bool):
        raise InputError(f"Parameter value must be an integer, got {raw!r}")
    if isinstance(raw, int):
        return [raw]
    if isinstance(raw, list):
        return [v for item in raw for v in _values(item)]
    if isinstance(raw, str) and ".." in raw:
        lo, hi = raw.split("..", 1)
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError as e:
            raise InputError(f"Bad range {raw!r}") from e
    try:
        return [int(raw)]
    except (TypeError, ValueError) as e:
        raise InputError(f"Parameter value must be an integer or 'a..b', got {raw!r}") from e


def expand_entry(entry: Dict[str, Any]) -> List[TheoremCase]:
    try:
        catalog = entry["catalog"]
        template = entry.get("family", catalog)
    except (KeyError, TypeError) as e:
        raise InputError(f"Suite entry needs a 'catalog' key: {entry!r}") from e
    if catalog not in CATALOG:
        raise InputError(f"Suite entry names unknown catalog '{catalog}'")
    params = entry.get("params") or {}
    bounds = [DegreeBound.parse(str(d)) for d in entry.get("d", ["inf"])]
    max_order = entry.get("max_order")

    names = list(params)
    cases = []
    for combo in itertools.product(*(_values(params[name]) for name in names)):
        try:
            family = template.format(**dict(zip(names, combo)))
        except KeyError as e:
            raise InputError(f"Family template {template!r} uses an undeclared parameter {e}") from e
        spec = parse_family(family)
        if max_order is not None and generate(spec).n > max_order:
            continue
        for d in bounds:
            cases.append(TheoremCase(case_id(catalog, str(spec), d), catalog, str(spec), d))
    return cases


def load_suite(name_or_path: Union[str, Path]) -> List[TheoremCase]:
    """Read a suite manifest (bundled name or YAML path) and expand it into cases, deduplicated by id."""
    path = settings.suite_path(str(name_or_path))
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        logger.error(f"Suite manifest not found: {path}")
        raise
    except yaml.YAMLError as e:
        raise InputError(f"Suite manifest {path} is not valid YAML: {e}") from e

    entries = data.get("cases", []) if isinstance(data, dict) else data
    seen = {}
    for entry in entries:
        for case in expand_entry(entry):
            seen.setdefault(case.id, case)
    logger.info(f"Loaded suite {path.name}: {len(seen)} cases")
    return sorted(seen.values(), key=lambda c: c.id)


def filter_cases(cases: Iterable[TheoremCase], pattern: Optional[str] = None,
                 max_r: Optional[int] = None) -> List[TheoremCase]:
    """Keep cases whose id contains `pattern` and whose family parameters are all <= max_r."""
    kept = []
    for case in cases:
        if pattern and pattern not in case.id:
            continue
        if max_r is not None and any(p > max_r for p in parse_family(case.family).params):
            continue
        kept.append(case)
    return kept
