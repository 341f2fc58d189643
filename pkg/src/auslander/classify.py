"""Indecomposable thin modules: enumeration, classification and counts."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

from .homcalc import ext_dims
from .repcore import Representation, ThinModule, rank

__all__ = [
    "ModuleClass", "Counts", "enumerate_thin", "classify_module",
    "classify_homological", "counts", "formula_counts",
]


class ModuleClass(enum.Enum):
    Exceptional = "exceptional"
    Spherical2 = "spherical"


def enumerate_thin(t: int) -> list[ThinModule]:
    """All indecomposable thin modules, ordered by end (descending), start, then word."""
    if t < 1:
        raise ValueError("t must be positive")
    out = []
    for end in range(t, 0, -1):
        for start in range(1, end + 1):
            for letters in itertools.product("AB", repeat=end - start):
                out.append(ThinModule(t, start, end, "".join(letters)))
    return out


def classify_module(m: ThinModule) -> ModuleClass:
    return ModuleClass.Exceptional if m.end == m.t else ModuleClass.Spherical2


def classify_homological(m: Representation) -> ModuleClass | None:
    """Classify from the self-extension triple; None when neither pattern fits.

    Spherical2 is the proxy (1, 0, 1) together with rank 0; the Serre-functor
    condition itself is not checked.
    """
    triple = tuple(ext_dims(m, m))
    if triple == (1, 0, 0):
        return ModuleClass.Exceptional
    if triple == (1, 0, 1) and rank(m) == 0:
        return ModuleClass.Spherical2
    return None


@dataclass(frozen=True)
class Counts:
    exceptional: int
    spherical: int
    bricks: int
    sequences: int

    def as_dict(self) -> dict[str, int]:
        return {"exceptional": self.exceptional, "spherical": self.spherical,
                "bricks": self.bricks, "sequences": self.sequences}


def formula_counts(t: int) -> Counts:
    return Counts(2 ** t - 1, 2 ** t - t - 1, 2 ** (t + 1) - t - 2, math.factorial(t))


def counts(t: int, homological: bool = False, sequence_limit: int = 7) -> Counts:
    """Counts obtained by enumeration.

    With ``homological`` each module is classified from its Ext triple instead
    of its rank. Full exceptional sequences are enumerated as worm diagrams up
    to ``sequence_limit`` and taken as t! beyond it.
    """
    exc = sph = 0
    for m in enumerate_thin(t):
        cls = classify_homological(m.to_rep()) if homological else classify_module(m)
        if cls is ModuleClass.Exceptional:
            exc += 1
        elif cls is ModuleClass.Spherical2:
            sph += 1
    if t <= sequence_limit:
        from .worms import enumerate_diagrams
        seqs = len(enumerate_diagrams(t))
    else:
        seqs = math.factorial(t)
    return Counts(exc, sph, exc + sph, seqs)
