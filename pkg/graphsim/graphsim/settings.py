"""
Django settings for graphsim project.

There is no database and no URL routing; Django provides configuration,
logging, management commands and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from dotenv import load_dotenv
import os

from django.core.exceptions import ImproperlyConfigured

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = os.getenv("GRAPHSIM_SECRET_KEY", "graphsim-local-only")

DEBUG = os.getenv("GRAPHSIM_DEBUG", "false").lower() in ("1", "true", "yes")

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "partitions",
    "measures",
    "generators",
    "experiments",
    "interchange",
]

# Nothing is persisted
DATABASES = {}


def _threads(raw):
    try:
        value = int(raw)
    except ValueError:
        raise ImproperlyConfigured(f"PM_THREADS must be an integer, got {raw!r}")
    if value < 0:
        raise ImproperlyConfigured(f"PM_THREADS must be non-negative, got {value}")
    return value


# Worker threads for Monte Carlo trials; 0 = one per core
PM_THREADS = _threads(os.getenv("PM_THREADS", "0") or "0")


GRAPHSIM_DEFAULTS = {
    "trials": 1000,
    "window": 1,
    "lemma_margin": 2.0,
    "theorem_margin": 3.0,
    "resolution_margin": 3.0,
    "compare_measures": [
        "RI", "ARI", "PC_mn", "APC_mn", "AMI",
        "RI(G)", "ARI(G)", "PC_mn(G)", "PC_gmn(G)", "PC_min(G)", "PC_max(G)", "APC_gmn(G)",
    ],
    "baseline_measures": ["RI(G)", "ARI(G)", "PC_mn(G)", "APC_mn(G)", "RI", "ARI"],
    "structure_measures": ["ARI(G)", "RI(G)"],
    "resolution_measures": ["ARI", "AMI", "ARI(G)"],
    "curve_measures": ["ARI", "AMI", "ARI(G)", "RI(G)", "K"],
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": os.getenv("GRAPHSIM_LOG_LEVEL", "WARNING").upper(),
    },
}
