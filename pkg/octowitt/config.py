from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml


def _load_file(path: Optional[Path]) -> Dict[str, Any]:
    if path is None or not path.exists():
        return {}
    with path.open("r", encoding="utf-8") as fh:
        data = yaml.safe_load(fh) or {}
    if not isinstance(data, dict):
        return {}
    return {str(k).lower(): v for k, v in data.items()}


class Settings:
    """Centralized configuration for the verification engine and CLI."""

    def __init__(self) -> None:
        config_raw = os.environ.get("OCTOWITT_CONFIG")
        self.config_path: Optional[Path] = (
            Path(config_raw).expanduser() if config_raw else None
        )
        file_values = _load_file(self.config_path)

        def pick(env: str, key: str, default: Any) -> Any:
            raw = os.environ.get(env)
            if raw is not None and raw.strip():
                return raw
            return file_values.get(key, default)

        self.seed: int = int(pick("OCTOWITT_SEED", "seed", 42))
        self.samples: int = int(pick("OCTOWITT_SAMPLES", "samples", 100))
        self.n_max: int = int(pick("OCTOWITT_N_MAX", "n_max", 2))
        # Random rationals use numerators and denominators bounded by this value.
        self.sample_bound: int = int(pick("OCTOWITT_SAMPLE_BOUND", "sample_bound", 100))
        self.log_level: str = str(pick("OCTOWITT_LOG_LEVEL", "log_level", "WARNING")).upper()


settings = Settings()
