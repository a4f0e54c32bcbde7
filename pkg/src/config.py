"""
Configuration management for the super-BMS3 verification engine.

Settings are loaded from environment variables (prefix ``BMS3_``) and an
optional ``.env`` file. Only operational knobs live here: logging, worker
count and the default window sizes used by the CLI. Module parameters
(lambda, alpha, h) are never read from the environment; they are always
passed explicitly so that every report is reproducible from its inputs.

Design decisions:
- Pydantic Settings for automatic env var loading and validation
- Separate sections for logging, execution and CLI defaults
- Field validators reject nonsense bounds at startup
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Runtime configuration loaded from environment variables.

    Example: BMS3_LOG_LEVEL=debug BMS3_MAX_WORKERS=4 bms3 verify jacobi --bound 4

    Configuration sections:
    1. Logging - level and renderer for structlog
    2. Execution - process pool size for sweep grids
    3. CLI defaults - bounds used when a flag is omitted
    """

    # ===== Logging =====
    log_level: str = Field(
        default="warning",
        pattern="^(debug|info|warning|error|critical)$",
        description="Logging level",
    )
    log_format: str = Field(
        default="console",
        pattern="^(json|console)$",
        description="Log output format (json for pipelines, console for terminals)",
    )

    # ===== Execution =====
    max_workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Worker processes for sweep grids (1 runs in-process)",
    )

    # ===== CLI Defaults =====
    default_idx_bound: int = Field(
        default=3,
        ge=0,
        le=32,
        description="Generator index bound when --bound is omitted",
    )
    default_max_e1: int = Field(
        default=3,
        ge=0,
        description="Window cap on the first variable when --max-e1 is omitted",
    )
    default_max_e2: int = Field(
        default=3,
        ge=0,
        description="Window cap on the second variable when --max-e2 is omitted",
    )
    report_version: str = Field(
        default="1",
        description="Version tag stamped on every JSON report",
    )

    @field_validator("report_version")
    @classmethod
    def validate_report_version(cls, v: str) -> str:
        """Report version must be a non-empty token."""
        if not v.strip():
            raise ValueError("report_version cannot be empty")
        return v.strip()

    model_config = SettingsConfigDict(
        env_prefix="BMS3_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


# Singleton instance - loaded once at module import
settings = Settings()
