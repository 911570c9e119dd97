"""Search limits, overridable through environment variables."""

import os

DEFAULT_EXACT_LIMIT = 18
DEFAULT_SEARCH_LIMIT = 18
DEFAULT_ISO_LIMIT = 16
DEFAULT_STEP_BUDGET = 10_000


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}")


def exact_limit():
    """Vertex cap for exact longest-cycle / longest-path searches."""
    return _env_int("EGSTAB_EXACT_LIMIT", DEFAULT_EXACT_LIMIT)


def search_limit():
    """Vertex cap for the recognizers (class embeddings, dense-family search)."""
    return _env_int("EGSTAB_SEARCH_LIMIT", DEFAULT_SEARCH_LIMIT)


def iso_limit():
    return _env_int("EGSTAB_ISO_LIMIT", DEFAULT_ISO_LIMIT)
