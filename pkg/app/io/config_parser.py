"""
Parser for experiment config files.

The format is line oriented: `[section]` headers followed by `key = value`
lines. `#` and `;` start comments. Lists are comma separated; numeric lists
also accept a range `lo..hi step s` (inclusive, step defaults to 1).

    [experiment]
    scenario = sweep
    gate = Hadamard
    protocols = CHRW, RWA_BS, RWA
    T = 1..40 step 1

Every error names the offending line.
"""
from __future__ import annotations

import logging
import math
import re
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from app.errors import ConfigError
from app.schemas.experiment import ExperimentConfig

logger = logging.getLogger(__name__)

_RANGE = re.compile(r"^([-+0-9.eE]+?)\s*\.\.\s*([-+0-9.eE]+)(?:\s+step\s+(\S+))?$")
_SECTION = re.compile(r"^\[\s*([A-Za-z_]+)\s*\]$")


def _text(value: str) -> str:
    return value


def _int(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"expected an integer, got {value!r}") from None


def _float(value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ValueError(f"expected a number, got {value!r}") from None


def _bool(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"expected a boolean, got {value!r}")


def _names(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def parse_range(value: str) -> List[float]:
    """`lo..hi step s` to the inclusive list lo, lo+s, ..., <= hi."""
    match = _RANGE.match(value.strip())
    if not match:
        raise ValueError(f"expected a range lo..hi [step s], got {value!r}")
    lo, hi = _float(match.group(1)), _float(match.group(2))
    step = _float(match.group(3)) if match.group(3) else 1.0
    if step <= 0 or hi < lo:
        raise ValueError(f"empty range {value!r}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 12) for i in range(count)]


def _numbers(value: str) -> List[float]:
    if ".." in value:
        return parse_range(value)
    return [_float(item) for item in _names(value)]


# section -> key -> (field path, converter)
KEYS: Dict[str, Dict[str, Tuple[Tuple[str, ...], Callable[[str], Any]]]] = {
    "experiment": {
        "scenario": (("scenario",), _text),
        "gate": (("gate",), _text),
        "protocols": (("protocols",), _names),
        "T": (("gate_times",), _numbers),
        "units": (("units",), _text),
        "output": (("output",), _text),
        "seed": (("seed",), _int),
        "samples": (("samples",), _int),
        "threads": (("threads",), _int),
    },
    "noise": {
        "kind": (("noise", "kind"), _text),
        "targets": (("noise", "targets"), _names),
        "rates": (("noise", "rates"), _numbers),
        "trials": (("noise", "trials"), _int),
        "segments": (("noise", "segments"), _int),
    },
    "rates": {
        "preset": (("rates", "preset"), _text),
        "gamma_hz": (("rates", "gamma_hz"), _numbers),
        "gamma_phi_hz": (("rates", "gamma_phi_hz"), _numbers),
        "full_grid": (("rates", "full_grid"), _bool),
    },
    "leakage": {
        "gaps": (("leakage", "gaps"), _numbers),
        "lambda_f": (("leakage", "lambda_f"), _float),
    },
}

REQUIRED: List[Tuple[str, str]] = [("experiment", "scenario")]


def _strip_comment(line: str) -> str:
    for marker in ("#", ";"):
        idx = line.find(marker)
        if idx >= 0:
            line = line[:idx]
    return line.strip()


def _line_for(loc: Tuple[Any, ...], lines: Dict[Tuple[str, ...], int]) -> Optional[int]:
    """Best line number for a pydantic error location."""
    path = tuple(str(part) for part in loc if isinstance(part, str))
    while path:
        if path in lines:
            return lines[path]
        candidates = [n for p, n in lines.items() if p[: len(path)] == path]
        if candidates:
            return min(candidates)
        path = path[:-1]
    return None


def parse_config(text: str, scenario: Optional[str] = None) -> ExperimentConfig:
    """
    Strictly parse a config file into an ExperimentConfig. `scenario` fills in
    the scenario key when the file does not set it.
    """
    values: Dict[str, Any] = {}
    lines: Dict[Tuple[str, ...], int] = {}
    section: Optional[str] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        header = _SECTION.match(line)
        if header:
            section = header.group(1)
            if section not in KEYS:
                raise ConfigError(f"unknown section [{section}]", number)
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {line!r}", number)
        if section is None:
            raise ConfigError("key outside of any [section]", number)
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in KEYS[section]:
            raise ConfigError(f"unknown key {key!r} in [{section}]", number)
        path, convert = KEYS[section][key]
        if path in lines:
            raise ConfigError(f"duplicate key {key!r} (first set on line {lines[path]})", number)
        try:
            converted = convert(value)
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}", number) from None
        target = values
        for part in path[:-1]:
            target = target.setdefault(part, {})
        target[path[-1]] = converted
        lines[path] = number

    if scenario is not None:
        values.setdefault("scenario", scenario)
    for section_name, key in REQUIRED:
        path = KEYS[section_name][key][0]
        if path not in lines and path[0] not in values:
            raise ConfigError(f"missing required key {key!r} in [{section_name}]")

    try:
        config = ExperimentConfig(**values)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ConfigError(first["msg"], _line_for(first["loc"], lines)) from None
    logger.debug(f"parsed config for scenario {config.scenario!r}")
    return config


def _format(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return ", ".join(_format(v) for v in value)
    return str(value)


def dump_config(config: ExperimentConfig) -> str:
    """Serialize a config in the format parse_config reads (empty and unset values omitted)."""
    data = config.model_dump()
    out: List[str] = []
    for section, keys in KEYS.items():
        body = []
        for key, (path, _) in keys.items():
            value: Any = data
            for part in path:
                value = value[part]
            if value is None or value == []:
                continue
            body.append(f"{key} = {_format(value)}")
        if body:
            out.append(f"[{section}]")
            out.extend(body)
            out.append("")
    return "\n".join(out)
