import os
from functools import lru_cache
from typing import List

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

# Pick up a local .env before reading the environment
load_dotenv()

# Accepted by both logging and uvicorn
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

# Environment variable -> Settings field
_ENV_FIELDS = {
    "FILTRATION_LOG_LEVEL": "log_level",
    "FILTRATION_SWEEP_WORKERS": "sweep_workers",
    "FILTRATION_HOST": "host",
    "PORT": "port",
    "FILTRATION_CORS_ORIGINS": "cors_origins",
}


class Settings(BaseModel):
    """Process-level settings shared by the CLI and the HTTP service."""
    log_level: str = "WARNING"
    sweep_workers: int = Field(default=1, ge=1)
    host: str = "127.0.0.1"
    port: int = Field(default=8000, ge=1, le=65535)
    cors_origins: List[str] = ["*"]

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"must be one of {', '.join(LOG_LEVELS)}")
        return level

    @field_validator("cors_origins", mode="before")
    @classmethod
    def _split_origins(cls, value):
        if isinstance(value, str):
            return [origin.strip() for origin in value.split(",") if origin.strip()]
        return value

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            field: os.environ[name]
            for name, field in _ENV_FIELDS.items()
            if os.environ.get(name)
        }
        return cls.model_validate(values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the settings for this process."""
    return Settings.from_env()
