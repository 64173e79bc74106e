import json
import logging
import os
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)

def ensure_dir_exists(dir_path: str):
    if dir_path and not os.path.exists(dir_path):
        try:
            os.makedirs(dir_path)
            logger.info(f"Created directory: {dir_path}")
        except OSError as e:
            logger.error(f"Error creating directory {dir_path}: {e}")
            raise


def dump_json(data: Any) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def read_json(path: str) -> Any:
    source = Path(path)
    if not source.exists():
        logger.error(f"File not found: {source.resolve()}")
        raise FileNotFoundError(f"File not found: {source}")
    with open(source, "r", encoding="utf-8") as f:
        return json.load(f)


def write_text(path: str, text: str):
    target = Path(path)
    ensure_dir_exists(str(target.parent) if str(target.parent) != "." else "")
    with open(target, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Wrote {target}")


def read_text(path: str) -> str:
    source = Path(path)
    if not source.exists():
        logger.error(f"File not found: {source.resolve()}")
        raise FileNotFoundError(f"File not found: {source}")
    with open(source, "r", encoding="utf-8") as f:
        return f.read()
