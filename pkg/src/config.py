import os

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_ORACLE_CAP = 14


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in ("1", "true", "yes", "on")


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    # 0 disables the cap
    oracle_cap: int = Field(default=DEFAULT_ORACLE_CAP, ge=0)
    threads: int = Field(default=1, ge=1)
    batch_size: int = Field(default=64, ge=1)
    log_level: str = "WARNING"
    show_progress: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        # only variables that are set override the defaults
        values = {}
        if os.getenv("DSM_ORACLE_CAP"):
            values["oracle_cap"] = int(os.getenv("DSM_ORACLE_CAP"))
        if os.getenv("DSM_THREADS"):
            values["threads"] = int(os.getenv("DSM_THREADS"))
        if os.getenv("DSM_BATCH_SIZE"):
            values["batch_size"] = int(os.getenv("DSM_BATCH_SIZE"))
        if os.getenv("DSM_LOG_LEVEL"):
            values["log_level"] = os.getenv("DSM_LOG_LEVEL").upper()
        if os.getenv("DSM_PROGRESS"):
            values["show_progress"] = _env_flag("DSM_PROGRESS")
        return cls(**values)
