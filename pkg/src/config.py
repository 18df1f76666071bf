"""Application configuration settings."""
from __future__ import annotations

import os
import threading
from pathlib import Path

try:  # Optional dependency
    from pydantic_settings import BaseSettings, SettingsConfigDict
except Exception:  # pragma: no cover - fallback when pydantic-settings is absent
    BaseSettings = None  # type: ignore
    SettingsConfigDict = None  # type: ignore

from dotenv import load_dotenv


if BaseSettings is not None:

    class Settings(BaseSettings):
        """Typed solver and generator settings using Pydantic for parsing."""

        model_config = SettingsConfigDict(env_prefix="POSETDIM_", env_file=".env", env_file_encoding="utf-8")

        timeout_s: float = 60.0
        gadget_max_k: int = 2
        seed: int = 0
        log_level: str = "INFO"
        bdim_max_n: int = 6
        bdim_max_d: int = 2

else:

    class Settings:  # type: ignore[no-redef]
        """Lightweight settings container when Pydantic is unavailable."""

        def __init__(
            self,
            timeout_s: float | None = None,
            gadget_max_k: int | None = None,
            seed: int | None = None,
            log_level: str | None = None,
            bdim_max_n: int | None = None,
            bdim_max_d: int | None = None,
        ) -> None:
            load_dotenv(Path.cwd() / ".env")
            self.timeout_s = timeout_s if timeout_s is not None else float(os.getenv("POSETDIM_TIMEOUT_S", "60"))
            self.gadget_max_k = gadget_max_k if gadget_max_k is not None else int(os.getenv("POSETDIM_GADGET_MAX_K", "2"))
            self.seed = seed if seed is not None else int(os.getenv("POSETDIM_SEED", "0"))
            self.log_level = log_level or os.getenv("POSETDIM_LOG_LEVEL", "INFO")
            self.bdim_max_n = bdim_max_n if bdim_max_n is not None else int(os.getenv("POSETDIM_BDIM_MAX_N", "6"))
            self.bdim_max_d = bdim_max_d if bdim_max_d is not None else int(os.getenv("POSETDIM_BDIM_MAX_D", "2"))


_settings_lock = threading.Lock()
_settings_instance: Settings | None = None


def get_settings() -> Settings:
    """Return a singleton Settings instance."""

    global _settings_instance
    if _settings_instance is None:
        with _settings_lock:
            if _settings_instance is None:
                _settings_instance = Settings()
    return _settings_instance


# Project root directory
BASE_DIR = Path(__file__).resolve().parent.parent


__all__ = ["Settings", "get_settings", "BASE_DIR"]
