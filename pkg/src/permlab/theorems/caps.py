"""Upper limits on q for the exhaustive witness searches."""

from __future__ import annotations

import os

ENV_VAR = "PERMLAB_SEARCH_CAP"

# largest q searched by default
DEFAULT_CAPS = {
    "thm11": 8,
    "thm17": 9,
    "lemma55": 9,
}


class SearchCapExceeded(ValueError):
    pass


def search_cap(kind: str, override: int | None = None) -> int:
    """Explicit override, else the environment variable, else the default for ``kind``."""
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR}={env!r} is not an integer") from None
    return DEFAULT_CAPS[kind]


def check_cap(kind: str, q: int, override: int | None = None) -> None:
    cap = search_cap(kind, override)
    if q > cap:
        raise SearchCapExceeded(f"{kind}: q={q} exceeds the search cap {cap} (set {ENV_VAR} to raise it)")
