"""Capacity bounds for the exhaustive searches.

Each bound can be overridden through an environment variable holding an
integer, e.g. ``CRITHYPER_MAX_ISO_N=11``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

from .errors import InputError

ENV_PREFIX = "CRITHYPER_"


@dataclass(frozen=True)
class Bounds:
    max_module_n: int = 16  # subset enumeration, 2**n candidates
    max_iso_n: int = 10  # isomorphism search
    max_realize_n: int = 7  # 2**(n(n-1)/2) tournaments
    max_script_h_n: int = 16  # module enumeration on component hypergraphs
    crosscheck_n: int = 12  # brute-force ground truth in criteria reports

    @classmethod
    def from_env(cls, environ=None) -> "Bounds":
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                try:
                    values[f.name] = int(raw)
                except ValueError as exc:
                    raise InputError(f"{ENV_PREFIX}{f.name.upper()} must be an integer, got {raw!r}") from exc
        return cls(**values)


def bounds() -> Bounds:
    return Bounds.from_env()
