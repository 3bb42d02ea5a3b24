"""Library configuration via environment variables."""

import logging
from typing import ClassVar

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical and enumeration limits loaded from SUBIND_* variables and .env file."""

    tolerance: float = 1e-9
    enumeration_cap: int = 24
    multiset_cap: int = 20
    workers: int = 1
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="SUBIND_", env_file=".env", env_file_encoding="utf-8"
    )

    HARD_ENUMERATION_CAP: ClassVar[int] = 30
    HARD_MULTISET_CAP: ClassVar[int] = 20

    def validate_limits(self) -> None:
        """Raise if a limit is outside the range the library can honour."""
        if self.tolerance < 0:
            raise RuntimeError(f"SUBIND_TOLERANCE must be >= 0, got {self.tolerance}")
        if not 0 <= self.enumeration_cap <= self.HARD_ENUMERATION_CAP:
            raise RuntimeError(
                f"SUBIND_ENUMERATION_CAP must be in 0..{self.HARD_ENUMERATION_CAP}, "
                f"got {self.enumeration_cap}"
            )
        if not 1 <= self.multiset_cap <= self.HARD_MULTISET_CAP:
            raise RuntimeError(
                f"SUBIND_MULTISET_CAP must be in 1..{self.HARD_MULTISET_CAP}, "
                f"got {self.multiset_cap}"
            )
        if self.workers < 1:
            raise RuntimeError(f"SUBIND_WORKERS must be >= 1, got {self.workers}")
        if self.log_level.upper() not in logging.getLevelNamesMapping():
            raise RuntimeError(f"SUBIND_LOG_LEVEL is not a logging level: {self.log_level!r}")


_active: Settings | None = None


def get_settings() -> Settings:
    """Return the active settings, loading them from the environment on first use."""
    global _active
    if _active is None:
        _active = Settings()
        _active.validate_limits()
    return _active


def configure(**overrides: object) -> Settings:
    """Replace the active settings with environment values updated by ``overrides``."""
    global _active
    settings = Settings(**overrides)  # type: ignore[arg-type]
    settings.validate_limits()
    _active = settings
    return settings


def reset_settings() -> None:
    """Drop the active settings so the next ``get_settings`` call reloads them."""
    global _active
    _active = None
