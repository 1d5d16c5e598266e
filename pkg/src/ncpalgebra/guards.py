"""Size guards for the exponential-time enumerations.

Defaults can be changed at runtime through :data:`GUARDS`; the environment
variable ``NCP_GUARD_BLOCKS`` overrides the block-count guards (ideals,
contractible equivalences, brute-force linear extensions) at import time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DegreeOverflow, OrderOverflow


@dataclass
class Guards:
    enumerate_legs: int = 14
    ideal_blocks: int = 20
    equivalence_blocks: int = 10
    linext_bruteforce_blocks: int = 8
    coloration_maps: int = 10**7
    series_order: int = 10
    faadibruno_n: int = 10


def _from_env() -> Guards:
    guards = Guards()
    raw = os.environ.get("NCP_GUARD_BLOCKS")
    if raw:
        value = int(raw)
        guards.ideal_blocks = value
        guards.equivalence_blocks = value
        guards.linext_bruteforce_blocks = value
    return guards


GUARDS = _from_env()


def check(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise DegreeOverflow(f"{what} = {value} exceeds guard {limit}")


def check_order(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise OrderOverflow(f"{what} = {value} exceeds guard {limit}")
