"""Analysis configuration management."""

import os
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

DEFAULT_FIXTURE_DIR = Path(__file__).resolve().parent.parent / "families" / "data"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_flag(name: str, default: bool) -> bool:
    return os.getenv(name, "true" if default else "false").lower() in ("1", "true", "yes")


class AnalysisConfig(BaseModel):
    """Runtime settings for classification and verification runs."""

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_json: bool = Field(default=False, description="Render logs as JSON")

    # Inputs
    fixture_dir: Path = Field(default=DEFAULT_FIXTURE_DIR, description="Directory of named graph fixtures")
    max_vertices: int = Field(default=400, ge=2, description="Largest vertex count accepted for dense analysis")

    # Reports
    include_timing: bool = Field(default=True, description="Include elapsed_seconds in reports")
    machine_output: bool = Field(default=False, description="Emit JSON reports instead of text")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize and validate the logging level."""
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level

    @classmethod
    def from_env(cls) -> "AnalysisConfig":
        """Create configuration from environment variables."""
        return cls(
            log_level=os.getenv("DRG_LOG_LEVEL", "WARNING"),
            log_json=_env_flag("DRG_LOG_JSON", False),
            fixture_dir=Path(os.getenv("DRG_FIXTURE_DIR", str(DEFAULT_FIXTURE_DIR))),
            max_vertices=int(os.getenv("DRG_MAX_VERTICES", "400")),
            include_timing=_env_flag("DRG_INCLUDE_TIMING", True),
            machine_output=_env_flag("DRG_MACHINE_OUTPUT", False),
        )
