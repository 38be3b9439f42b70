"""
Django settings for the brauer_blocks project.

The project has no database, no URLs and no templates: it is a set of
management commands over the combinatorics in ``core.combinatorics``.
"""

from pathlib import Path
from dotenv import load_dotenv
import os
import warnings

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load .env file from brauer_blocks directory
env_path = BASE_DIR / "brauer_blocks" / ".env"
warnings.filterwarnings("ignore", message=".*python-dotenv.*")

try:
    load_dotenv(dotenv_path=env_path, verbose=False)
except Exception:
    try:
        load_dotenv(verbose=False)
    except Exception:
        pass


def env_bool(name: str, default: str = "False") -> bool:
    return os.getenv(name, default).lower() in ("true", "1", "yes")


SECRET_KEY = os.getenv("SECRET_KEY", "brauer-blocks-local")

DEBUG = env_bool("DEBUG")

ALLOWED_HOSTS: list[str] = []


# Application definition

INSTALLED_APPS = [
    "core",
]

DATABASES: dict = {}

USE_TZ = True

# Search bounds used when a command does not pass its own
BRAUER_BLOCKS = {
    "MAX_INDEX": int(os.getenv("BRAUER_MAX_INDEX", "8")),
    "R_SPAN": int(os.getenv("BRAUER_R_SPAN", "4")),
    "MAX_SIZE": int(os.getenv("BRAUER_MAX_SIZE", "40")),
    "BFS_MAX_STATES": int(os.getenv("BRAUER_BFS_MAX_STATES", "200000")),
}

LOG_LEVEL = os.getenv("BRAUER_LOG_LEVEL", "INFO").upper()

# Logging configuration
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "filters": {
        "move_trace": {
            "()": "brauer_blocks.logging.MoveTraceFilter",
            "enabled": env_bool("BRAUER_LOG_MOVES"),
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose" if DEBUG else "simple",
            "filters": ["move_trace"],
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": True,
        },
        "core": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}
