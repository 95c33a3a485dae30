import logging
import os
import sys
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    grove_edge_cap: int = Field(default=20, ge=0)
    kappa_max_n: int = Field(default=5, ge=2)
    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings(
        grove_edge_cap=int(os.getenv("CACTUS_GROVE_EDGE_CAP", "20")),
        kappa_max_n=int(os.getenv("CACTUS_KAPPA_MAX_N", "5")),
        log_level=os.getenv("CACTUS_LOG_LEVEL", "WARNING").upper(),
    )


def configure_logging(verbose: bool = False) -> None:
    """Route the ``app`` logger to stderr; stdout is reserved for output documents."""
    level = logging.DEBUG if verbose else get_settings().log_level
    logger = logging.getLogger("app")
    if logger.handlers:
        logger.handlers[0].setStream(sys.stderr)
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(level)
