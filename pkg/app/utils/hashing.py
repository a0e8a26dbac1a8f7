"""
Stable fingerprints for experiment configs.
"""
import hashlib

from app.schemas.experiment import ExperimentConfig

# Fields that do not change the data a run produces.
_EXCLUDED = {"output", "threads"}


def config_hash(config: ExperimentConfig, length: int = 16) -> str:
    """Hex digest of the canonical JSON form of a config."""
    payload = config.model_dump_json(exclude=_EXCLUDED)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:length]
