"""Worm diagrams and their bijection with permutations.

Grid convention: cells (x, y) with x, y >= 0 and x + y <= t - 1. Vertex v of
any worm sits on the anti-diagonal x + y = v - 1. Worm k (1-based) has its
vertex-t cell at (k - 1, t - k); walking from vertex j + 1 down to vertex j
moves one cell left for an alpha edge and one cell down for a beta edge.

Permutations are tuples in one-line notation with values 1..t.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import exact
from .errors import SearchFailed
from .homcalc import candidate_maps, ext_dims, hom_basis, is_indecomposable
from .repcore import (
    Morphism, QuiverAlgebra, Representation, ThinModule, projective, quotient,
    subrepresentation,
)

__all__ = [
    "Permutation", "identity_perm", "longest", "tau", "compose", "inverse",
    "is_permutation", "right_tau", "left_tau", "inversions", "non_inversions",
    "parse_permutation", "format_permutation", "Worm", "WormDiagram", "sigma",
    "lambda_perm", "f_count", "diagram_from_permutation", "enumerate_diagrams",
    "diagram_to_sequence", "verify_exceptional_sequence", "build_filtration",
    "diagram_to_json", "diagram_from_json", "delta_diagram", "nabla_diagram",
]

Permutation = tuple[int, ...]


# -- permutations -----------------------------------------------------------

def identity_perm(t: int) -> Permutation:
    return tuple(range(1, t + 1))


def longest(t: int) -> Permutation:
    return tuple(range(t, 0, -1))


def tau(t: int, i: int) -> Permutation:
    if not 1 <= i <= t - 1:
        raise ValueError(f"transposition index {i} out of range 1..{t - 1}")
    p = list(range(1, t + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: k -> p(q(k))."""
    return tuple(p[x - 1] for x in q)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for k, x in enumerate(p, 1):
        out[x - 1] = k
    return tuple(out)


def right_tau(p: Permutation, i: int) -> Permutation:
    """p . tau_i (swaps positions i, i+1)."""
    return compose(p, tau(len(p), i))


def left_tau(i: int, p: Permutation) -> Permutation:
    """tau_i . p (swaps values i, i+1)."""
    return compose(tau(len(p), i), p)


def inversions(p: Permutation) -> int:
    return sum(1 for a, b in itertools.combinations(p, 2) if a > b)


def non_inversions(p: Permutation) -> int:
    return sum(1 for a, b in itertools.combinations(p, 2) if a < b)


def parse_permutation(text: str, t: int | None = None) -> Permutation:
    """Parse ``"213"`` (digits, t <= 9) or ``"2,1,3"``."""
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        if not all(s.strip().isdigit() for s in parts):
            raise ValueError(f"malformed permutation {text!r}")
        p = tuple(int(s) for s in parts)
    else:
        if not text.isdigit():
            raise ValueError(f"malformed permutation {text!r}")
        p = tuple(int(c) for c in text)
        if len(p) > 9:
            raise ValueError("digit-string permutations are limited to t <= 9; use commas")
    if not is_permutation(p):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(p)}")
    if t is not None and len(p) != t:
        raise ValueError(f"permutation {text!r} has length {len(p)}, expected {t}")
    return p


def format_permutation(p: Permutation) -> str:
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


# -- worms and diagrams -----------------------------------------------------

Cell = tuple[int, int]


@dataclass(frozen=True)
class Worm:
    """An exceptional thin module placed in the grid as worm number ``index``."""

    thin: ThinModule
    index: int

    def __post_init__(self):
        if self.thin.end != self.thin.t:
            raise ValueError(f"worm {self.thin} must end at vertex t")
        if not 1 <= self.index <= self.thin.t:
            raise ValueError("worm index out of range")

    @property
    def t(self) -> int:
        return self.thin.t

    @property
    def start(self) -> int:
        return self.thin.start

    @property
    def word(self) -> str:
        return self.thin.word

    @property
    def length(self) -> int:
        return self.thin.length

    @property
    def head(self) -> Cell:
        return (self.index - 1, self.t - self.index)

    @property
    def mu_alpha(self) -> int:
        """Length of the run of alpha edges ending at vertex t."""
        return len(self.word) - len(self.word.rstrip("A"))

    @property
    def mu_beta(self) -> int:
        """Length of the run of beta edges leaving vertex t."""
        return len(self.word) - len(self.word.rstrip("B"))

    def cells(self) -> list[Cell]:
        """Cells from vertex t down to the start vertex."""
        x, y = self.head
        out = [(x, y)]
        for letter in reversed(self.word):
            if letter == "A":
                x -= 1
            else:
                y -= 1
            out.append((x, y))
        return out

    def __str__(self) -> str:
        return str(self.thin)


@dataclass(frozen=True)
class WormDiagram:
    t: int
    worms: tuple[Worm, ...]

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise ValueError("invalid worm diagram: " + "; ".join(problems))

    def problems(self) -> list[str]:
        t = self.t
        out = []
        if len(self.worms) != t:
            return [f"expected {t} worms, got {len(self.worms)}"]
        for k, w in enumerate(self.worms, 1):
            if w.index != k or w.t != t:
                out.append(f"worm {k} is mislabelled")
        if sorted(w.length for w in self.worms) != list(range(1, t + 1)):
            out.append("worm lengths are not 1..t")
        seen: set[Cell] = set()
        for w in self.worms:
            for x, y in w.cells():
                if x < 0 or y < 0:
                    out.append(f"worm {w.index} leaves the triangle at {(x, y)}")
                elif (x, y) in seen:
                    out.append(f"cell {(x, y)} is covered twice")
                seen.add((x, y))
        if not out and len(seen) != t * (t + 1) // 2:
            out.append("cells do not exhaust the triangle")
        return out

    @classmethod
    def from_words(cls, t: int, specs: Iterable[str | ThinModule]) -> "WormDiagram":
        worms = []
        for k, s in enumerate(specs, 1):
            thin = s if isinstance(s, ThinModule) else ThinModule.parse(s, t)
            worms.append(Worm(thin, k))
        return cls(t, tuple(worms))

    @property
    def thins(self) -> tuple[ThinModule, ...]:
        return tuple(w.thin for w in self.worms)

    def __str__(self) -> str:
        return "(" + ", ".join(str(w) for w in self.worms) + ")"


def sigma(d: WormDiagram) -> Permutation:
    return tuple(w.start for w in d.worms)


def lambda_perm(d: WormDiagram) -> Permutation:
    return tuple(w.length for w in d.worms)


def f_count(d: WormDiagram) -> int:
    return sum(w.word.count("B") for w in d.worms)


def diagram_from_permutation(p: Permutation) -> WormDiagram:
    """Draw worms left to right; each step goes left when that cell is free, else down."""
    p = tuple(p)
    if not is_permutation(p):
        raise ValueError(f"{p} is not a permutation")
    t = len(p)
    taken: set[Cell] = set()
    worms = []
    for k, start in enumerate(p, 1):
        x, y = k - 1, t - k
        taken.add((x, y))
        letters = []
        for _ in range(t - start):
            if x > 0 and (x - 1, y) not in taken:
                x -= 1
                letters.append("A")
            else:
                y -= 1
                letters.append("B")
            taken.add((x, y))
        worms.append(Worm(ThinModule(t, start, t, "".join(reversed(letters))), k))
    return WormDiagram(t, tuple(worms))


def delta_diagram(t: int) -> WormDiagram:
    return diagram_from_permutation(longest(t))


def nabla_diagram(t: int) -> WormDiagram:
    return diagram_from_permutation(identity_perm(t))


def enumerate_diagrams(t: int) -> list[WormDiagram]:
    """One diagram per permutation, in lexicographic order of the start permutation."""
    if t < 1:
        raise ValueError("t must be positive")
    return [diagram_from_permutation(p) for p in itertools.permutations(range(1, t + 1))]


def diagram_to_sequence(d: WormDiagram) -> list[Representation]:
    alg = QuiverAlgebra(d.t)
    return [w.thin.to_rep(alg) for w in d.worms]


def verify_exceptional_sequence(seq: Sequence[Representation]) -> bool:
    """Exceptional objects, the (1,1,0)/(0,0,0) pattern on pairs, and unimodular udims."""
    if not seq:
        return False
    t = seq[0].t
    if len(seq) != t:
        return False
    for e in seq:
        if tuple(ext_dims(e, e)) != (1, 0, 0):
            return False
    for i, j in itertools.combinations(range(t), 2):
        if tuple(ext_dims(seq[i], seq[j])) != (1, 1, 0):
            return False
        if tuple(ext_dims(seq[j], seq[i])) != (0, 0, 0):
            return False
    det = round(np.linalg.det(np.array([e.dims for e in seq], dtype=float)))
    return abs(det) == 1


# -- filtration of P(t) -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiltrationStep:
    sub: Representation
    inclusion: Morphism      # sub -> P(t)
    piece: ThinModule        # the worm isomorphic to this step's graded piece


def build_filtration(d: WormDiagram) -> list[FiltrationStep]:
    """Chain F^1 < ... < F^t = P(t) with F^i / F^(i-1) isomorphic to worm t+1-i.

    Each step lifts an injective map from the next worm into P(t)/F^(i-1) and
    takes the preimage; choices are backtracked until every F^i is
    indecomposable.
    """
    t = d.t
    alg = QuiverAlgebra(t)
    pt = projective(alg, t)
    order = [d.worms[t - i].thin for i in range(1, t + 1)]

    def extend(level: int, spaces: list[np.ndarray], acc: list[FiltrationStep]):
        if level == t:
            return acc
        piece = order[level]
        quo, proj = quotient(pt, spaces)
        source = piece.to_rep(alg)
        for f in candidate_maps(hom_basis(source, quo)):
            if not f.is_injective():
                continue
            new_spaces = []
            for v in range(t):
                lifts = exact.solve(proj.comps[v], f.comps[v])
                new_spaces.append(exact.hstack([spaces[v], lifts], pt.dims[v]))
            sub, inc = subrepresentation(pt, new_spaces)
            if not is_indecomposable(sub):
                continue
            found = extend(level + 1, new_spaces, acc + [FiltrationStep(sub, inc, piece)])
            if found is not None:
                return found
        return None

    start = [exact.zeros(n, 0) for n in pt.dims]
    result = extend(0, start, [])
    if result is None:
        raise SearchFailed(f"no filtration of P({t}) found for {d}")
    return result


# -- JSON -------------------------------------------------------------------

def diagram_to_json(d: WormDiagram) -> dict:
    return {"t": d.t, "sigma": list(sigma(d)),
            "worms": [{"start": w.start, "word": w.word} for w in d.worms]}


def diagram_from_json(obj: dict) -> WormDiagram:
    t = int(obj["t"])
    thins = [ThinModule(t, int(w["start"]), t, str(w["word"])) for w in obj["worms"]]
    d = WormDiagram.from_words(t, thins)
    if "sigma" in obj and tuple(obj["sigma"]) != sigma(d):
        raise ValueError("sigma field disagrees with the worms")
    return d
