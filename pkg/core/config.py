"""
Runtime configuration
Settings come from SHIFTLAB_* environment variables, optionally via a .env file
"""

import logging
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

ENV_PREFIX = "SHIFTLAB_"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseModel):
    """Defaults for the harness, storage and logging"""

    data_dir: str = "shiftlab_data"
    jobs: int = Field(default=1, ge=0)
    graph_bound: int = Field(default=6, ge=1)
    complex_bound: int = Field(default=5, ge=1)
    shifted_bound: int = Field(default=6, ge=1)
    hope_bound: int = Field(default=5, ge=1)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from the environment, loading .env first"""
        load_dotenv()
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        return cls(**values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Cached settings for this process"""
    return Settings.from_env()


def configure_logging(level: Optional[str] = None) -> None:
    """Install a single stream handler on the root logger"""
    level_name = (level or get_settings().log_level).upper()
    root = logging.getLogger()
    if not any(getattr(h, "_shiftlab", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._shiftlab = True  # type: ignore[attr-defined]
        root.addHandler(handler)
    root.setLevel(getattr(logging, level_name, logging.WARNING))
