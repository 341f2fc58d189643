"""Right mutations and spherical twists on worm diagrams and on modules.

Right mutation R_i replaces the pair (E^i, E^(i+1)) by (E^(i+1), R E^i) and acts
on start permutations by sigma -> sigma . tau_i. The twist T_i along S(i) acts
worm by worm through a case table and on start permutations by
sigma -> tau_i . sigma.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotApplicable, SearchFailed, Unsupported
from .parallel import parallel_map
from .homcalc import candidate_maps, ext_dims, find_isomorphism, hom_basis
from .repcore import (
    QuiverAlgebra, Representation, ThinModule, simple,
    thin_canonical_form,
)
from .worms import (
    Permutation, Worm, WormDiagram, compose, diagram_from_permutation,
    enumerate_diagrams, format_permutation, inverse,
    lambda_perm, left_tau, longest, right_tau, sigma,
)

__all__ = [
    "TwistCase", "ShiftedThin", "TwistWord", "CayleyGraph", "Edge",
    "can_right_mutate", "right_mutate", "right_mutate_module", "can_twist",
    "twist_case", "twist_diagram", "twist_module_simple", "apply_twist_shifted",
    "apply_word", "strip_spherical", "reduced_word", "reduce_to_delta_by_mutations",
    "reduce_to_delta_by_twists", "reduction_path", "build_cayley_graph",
    "check_action_consistency", "graphs_dual",
]


class TwistCase(enum.Enum):
    O = "O"
    H = "H"
    E = "E"
    HE = "HE"
    Blocked = "Blocked"

    @classmethod
    def from_triple(cls, hom: int, ext1: int, ext2: int) -> "TwistCase":
        if ext2:
            return cls.Blocked
        return {(0, 0): cls.O, (1, 0): cls.H, (0, 1): cls.E, (1, 1): cls.HE}[(hom, ext1)]


def _check_index(t: int, i: int) -> None:
    if not 1 <= i <= t - 1:
        raise ValueError(f"generator index {i} out of range 1..{t - 1}")


# -- right mutations --------------------------------------------------------

def can_right_mutate(d: WormDiagram, i: int) -> bool:
    _check_index(d.t, i)
    return d.worms[i - 1].length > d.worms[i].length


def right_mutate(d: WormDiagram, i: int) -> WormDiagram:
    if not can_right_mutate(d, i):
        raise NotApplicable(f"R_{i} leaves the module category at {format_permutation(sigma(d))}")
    return diagram_from_permutation(right_tau(sigma(d), i))


def _thin_with_udim(t: int, udim: Sequence[int]) -> list[ThinModule]:
    if any(x not in (0, 1) for x in udim):
        return []
    support = [v for v in range(1, t + 1) if udim[v - 1]]
    if not support or support[-1] - support[0] + 1 != len(support):
        return []
    s, e = support[0], support[-1]
    return [ThinModule(t, s, e, "".join(w)) for w in itertools.product("AB", repeat=e - s)]


def _extensions(sub: Representation, quo: Representation) -> list[ThinModule]:
    """Thin indecomposables X with sub embedded in X and X/sub isomorphic to quo."""
    t = sub.t
    udim = [a + b for a, b in zip(sub.dims, quo.dims)]
    out = []
    for cand in _thin_with_udim(t, udim):
        x = cand.to_rep(sub.algebra)
        for f in candidate_maps(hom_basis(sub, x)):
            if f.is_injective() and find_isomorphism(f.cokernel()[0], quo) is not None:
                out.append(cand)
                break
    return out


def _unique(cands: list[ThinModule], what: str) -> ThinModule:
    if len(cands) != 1:
        raise SearchFailed(f"{what}: expected one candidate, found {[str(c) for c in cands]}")
    return cands[0]


def right_mutate_module(e_prime: Representation, e: Representation) -> Representation:
    """R E' for an exceptional pair (E', E) whose nonzero map E' -> E is onto.

    With K the kernel of that surjection, the result X is the thin module in a
    non-split sequence 0 -> E -> X -> K -> 0.
    """
    basis = hom_basis(e_prime, e)
    if len(basis) != 1:
        raise NotApplicable(f"expected hom(E', E) = 1, got {len(basis)}")
    f = basis[0]
    if not f.is_surjective():
        raise NotApplicable("the map E' -> E is not surjective")
    k, _ = f.kernel()
    x = _unique(_extensions(e, k), "right mutation")
    return x.to_rep(e.algebra)


# -- twists on diagrams ------------------------------------------------------

def _worm_starting_at(d: WormDiagram, v: int) -> Worm:
    return next(w for w in d.worms if w.start == v)


def can_twist(d: WormDiagram, i: int) -> bool:
    _check_index(d.t, i)
    return _worm_starting_at(d, i).word[0] == "B"


def twist_case(i: int, w: Worm | ThinModule) -> TwistCase:
    """Combinatorial case of an exceptional worm relative to S(i)."""
    thin = w.thin if isinstance(w, Worm) else w
    _check_index(thin.t, i)
    if thin.end != thin.t:
        raise ValueError("twist_case expects an exceptional worm")
    if thin.start == i:
        return TwistCase.H if thin.letter(i) == "B" else TwistCase.Blocked
    if thin.start == i + 1:
        return TwistCase.E
    if thin.start < i:
        into, out = thin.letter(i - 1), thin.letter(i)
        if (into, out) == ("A", "B"):
            return TwistCase.HE
        if (into, out) == ("B", "A"):
            return TwistCase.Blocked
    return TwistCase.O


def _twist_thin(i: int, thin: ThinModule) -> ThinModule:
    case = twist_case(i, thin)
    t, s, word = thin.t, thin.start, thin.word
    if case is TwistCase.O:
        return thin
    if case is TwistCase.H:
        return ThinModule(t, s + 1, t, word[1:])
    if case is TwistCase.E:
        return ThinModule(t, i, t, "A" + word)
    if case is TwistCase.HE:
        k = i - 1 - s
        return ThinModule(t, s, t, word[:k] + "BA" + word[k + 2:])
    raise NotApplicable(f"T_{i} sends {thin} outside the module category")


def twist_diagram(d: WormDiagram, i: int) -> WormDiagram:
    if not can_twist(d, i):
        raise NotApplicable(f"T_{i} leaves the module category at {format_permutation(sigma(d))}")
    worms = tuple(Worm(_twist_thin(i, w.thin), w.index) for w in d.worms)
    out = WormDiagram(d.t, worms)
    assert sigma(out) == left_tau(i, sigma(d))
    return out


# -- twists on modules -------------------------------------------------------

def _thin_of(rep: Representation) -> ThinModule:
    thin = thin_canonical_form(rep)
    if thin is None:
        raise SearchFailed(f"{rep!r} is not an indecomposable thin module")
    return thin


def twist_module_simple(i: int, m: Representation) -> Representation:
    """T_{S(i)} M for a module with ext2(S(i), M) = 0, realised as a module.

    H: M / S(i). E: the non-split extension of S(i) by M. HE: the non-split
    extension of S(i) by M / S(i). Each result is found among thin candidates
    and checked through explicit maps.
    """
    _check_index(m.t, i)
    s = simple(m.algebra, i)
    hom, ext1, ext2 = ext_dims(s, m)
    if ext2:
        raise NotApplicable(f"ext2(S({i}), M) = {ext2}: the twist is not a module")
    if hom > 1 or ext1 > 1:
        raise Unsupported(f"ext triple ({hom}, {ext1}, 0) is outside the case table")
    base = m
    if hom:
        inc = hom_basis(s, m)[0]
        base, _ = inc.cokernel()
    if not ext1:
        return base
    return _unique(_extensions(base, s), f"twist T_{i}").to_rep(m.algebra)


def _untwist_module_simple(i: int, m: Representation) -> Representation:
    """T_{S(i)}^-1 M: kernel of M -> S(i), then the non-split extension by S(i)."""
    s = simple(m.algebra, i)
    hom, ext1, ext2 = ext_dims(m, s)
    if ext2:
        raise Unsupported(f"ext2(M, S({i})) = {ext2}: the inverse twist is not a module")
    if hom > 1 or ext1 > 1:
        raise Unsupported(f"ext triple ({hom}, {ext1}, 0) is outside the case table")
    base = m
    if hom:
        proj = hom_basis(m, s)[0]
        base, _ = proj.kernel()
    if not ext1:
        return base
    return _unique(_extensions(s, base), f"inverse twist T_{i}").to_rep(m.algebra)


@dataclass(frozen=True)
class ShiftedThin:
    thin: ThinModule
    shift: int = 0

    def __str__(self) -> str:
        return f"{self.thin}[{self.shift}]" if self.shift else str(self.thin)


@dataclass(frozen=True)
class TwistWord:
    """Signed generators in application order: +i is T_i, -i is its inverse."""

    t: int
    gens: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for g in self.gens:
            if g == 0 or abs(g) > self.t - 1:
                raise ValueError(f"generator {g} out of range for t={self.t}")

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return " ".join(f"T{g}" if g > 0 else f"T{-g}^-1" for g in self.gens) or "id"


def apply_twist_shifted(i: int, obj: ShiftedThin, inverse: bool = False) -> ShiftedThin:
    thin = obj.thin
    _check_index(thin.t, i)
    if thin.start == thin.end == i:
        return ShiftedThin(thin, obj.shift + (1 if inverse else -1))
    rep = thin.to_rep()
    try:
        out = _untwist_module_simple(i, rep) if inverse else twist_module_simple(i, rep)
    except (NotApplicable, SearchFailed) as exc:
        raise Unsupported(f"{'inverse ' if inverse else ''}T_{i} on {obj}: {exc}") from None
    if out.dim == 0:
        raise Unsupported(f"T_{i} on {obj} gives zero")
    return ShiftedThin(_thin_of(out), obj.shift)


def apply_word(word: TwistWord, obj: ShiftedThin) -> ShiftedThin:
    for g in word.gens:
        obj = apply_twist_shifted(abs(g), obj, inverse=g < 0)
    return obj


def strip_spherical(m: ThinModule) -> tuple[TwistWord, ShiftedThin]:
    """A signed word moving a rank-0 thin module to S(1) up to shift.

    While the module has more than one vertex, its start vertex i is removed:
    by T_i^-1 when the first edge is alpha (S(i) is a quotient) and by T_i when
    it is beta (S(i) is a submodule). A simple S(j) is then walked down by the
    pairs T_(j-1), T_j, each sending S(j) to S(j-1) with no shift.
    """
    if m.end == m.t:
        raise ValueError(f"{m} has rank 1; only rank-0 modules are spherical")
    gens: list[int] = []
    cur = ShiftedThin(m)

    def step(g: int):
        nonlocal cur
        gens.append(g)
        cur = apply_twist_shifted(abs(g), cur, inverse=g < 0)

    while cur.thin.length > 1:
        i = cur.thin.start
        step(-i if cur.thin.word[0] == "A" else i)
    for j in range(cur.thin.start, 1, -1):
        step(j - 1)
        step(j)
    assert cur.thin.start == cur.thin.end == 1
    return TwistWord(m.t, tuple(gens)), cur


# -- reductions --------------------------------------------------------------

def reduced_word(p: Permutation) -> list[int]:
    """Leftmost-descent factorisation: p = tau_{i_l} ... tau_{i_1} for the returned [i_1, ..., i_l]."""
    p = tuple(p)
    out = []
    while True:
        i = next((k for k in range(1, len(p)) if p[k - 1] > p[k]), None)
        if i is None:
            return out
        out.append(i)
        p = right_tau(p, i)


def reduce_to_delta_by_mutations(d: WormDiagram) -> list[int]:
    return reduced_word(lambda_perm(d))


def reduce_to_delta_by_twists(d: WormDiagram) -> list[int]:
    return reduced_word(compose(longest(d.t), inverse(sigma(d))))


def reduction_path(d: WormDiagram, kind: str) -> tuple[list[int], list[WormDiagram]]:
    """Generator indices and the diagrams visited (starting with ``d``)."""
    if kind == "mutation":
        gens, act = reduce_to_delta_by_mutations(d), right_mutate
    elif kind == "twist":
        gens, act = reduce_to_delta_by_twists(d), twist_diagram
    else:
        raise ValueError(f"unknown kind {kind!r}")
    path = [d]
    for i in gens:
        path.append(act(path[-1], i))
    return gens, path


# -- Cayley graphs -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class Edge:
    source: Permutation
    target: Permutation
    gen: int


@dataclass(frozen=True)
class CayleyGraph:
    t: int
    kind: str
    nodes: tuple[Permutation, ...]
    edges: tuple[Edge, ...]

    def label(self, p: Permutation, convention: str = "sigma") -> str:
        if convention == "lambda":
            p = compose(longest(self.t), p)
        elif convention != "sigma":
            raise ValueError(f"unknown label convention {convention!r}")
        return format_permutation(p)

    def to_json(self, convention: str = "sigma") -> dict:
        lab = lambda p: self.label(p, convention)  # noqa: E731
        return {
            "t": self.t, "kind": self.kind, "label": convention,
            "nodes": [lab(p) for p in self.nodes],
            "edges": [{"from": lab(e.source), "to": lab(e.target), "gen": e.gen} for e in self.edges],
        }

    def to_dot(self, convention: str = "sigma") -> str:
        lines = [f'digraph "{self.kind}_t{self.t}" {{']
        for p in self.nodes:
            lines.append(f'  "{self.label(p, convention)}";')
        for e in self.edges:
            lines.append(f'  "{self.label(e.source, convention)}" -> "{self.label(e.target, convention)}" '
                         f'[gen={e.gen}, kind={self.kind}, label="{e.gen}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _node_edges(args: tuple[Permutation, str]) -> list[Edge]:
    p, kind = args
    d = diagram_from_permutation(p)
    out = []
    for i in range(1, d.t):
        if kind == "mutation" and can_right_mutate(d, i):
            out.append(Edge(p, right_tau(p, i), i))
        elif kind == "twist" and can_twist(d, i):
            out.append(Edge(p, left_tau(i, p), i))
    return out


def build_cayley_graph(t: int, kind: str) -> CayleyGraph:
    """Edges point from the higher f value to the lower one."""
    if kind not in ("mutation", "twist"):
        raise ValueError(f"unknown kind {kind!r}")
    nodes = tuple(sigma(d) for d in enumerate_diagrams(t))
    edges = sorted(e for batch in parallel_map(_node_edges, [(p, kind) for p in nodes]) for e in batch)
    return CayleyGraph(t, kind, nodes, tuple(edges))


def graphs_dual(t: int) -> bool:
    """sigma -> sigma^-1 maps the mutation graph onto the twist graph, generators included."""
    mut = build_cayley_graph(t, "mutation")
    tw = build_cayley_graph(t, "twist")
    mapped = sorted(Edge(inverse(e.source), inverse(e.target), e.gen) for e in mut.edges)
    return mapped == list(tw.edges)


# -- consistency between the module level and the combinatorics --------------

def check_action_consistency(d: WormDiagram, i: int, kind: str) -> bool:
    if kind == "mutation":
        new = right_mutate(d, i)
        seq = [w.thin.to_rep() for w in d.worms]
        x = right_mutate_module(seq[i - 1], seq[i])
        expect = list(d.thins)
        expect[i - 1], expect[i] = d.thins[i], _thin_of(x)
        return list(new.thins) == expect
    if kind == "twist":
        new = twist_diagram(d, i)
        alg = QuiverAlgebra(d.t)
        s = simple(alg, i)
        for old, want in zip(d.worms, new.worms):
            rep = old.thin.to_rep(alg)
            if twist_case(i, old) is not TwistCase.from_triple(*ext_dims(s, rep)):
                return False
            if _thin_of(twist_module_simple(i, rep)) != want.thin:
                return False
        return True
    raise ValueError(f"unknown kind {kind!r}")
