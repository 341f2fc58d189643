"""Named verification suites with machine-readable pass/fail entries."""

from __future__ import annotations

import itertools
import sys
from dataclasses import asdict, dataclass, field
from typing import Callable

from .actions import (
    TwistCase, build_cayley_graph, can_right_mutate, can_twist,
    check_action_consistency, graphs_dual, reduction_path, right_mutate,
    strip_spherical, twist_case, twist_diagram,
)
from .classify import (
    ModuleClass, classify_homological, classify_module, counts, enumerate_thin,
    formula_counts,
)
from .homcalc import (
    check_cy_resolutions, check_inequalities, euler_pairing, ext_dims,
    ext_dims_oracle, hom_complex, projective_resolution, quadratic_form,
)
from .parallel import parallel_map
from .repcore import QuiverAlgebra, simple
from .worms import (
    build_filtration, compose, delta_diagram, diagram_to_sequence,
    enumerate_diagrams, f_count, lambda_perm, left_tau, longest,
    non_inversions, right_tau, sigma, verify_exceptional_sequence,
)

__all__ = ["Check", "SuiteReport", "SUITES", "DEFAULT_BOUNDS", "run_suite"]


@dataclass
class Check:
    name: str
    t_max: int
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks], "notes": list(self.notes)}


# Desk-scale bounds per check; --t-max replaces them.
DEFAULT_BOUNDS = {
    "counts.homological": 6,
    "counts.combinatorial": 16,
    "counts.rigidity": 6,
    "sequences.bijection": 7,
    "sequences.permutation_identities": 6,
    "sequences.homological": 5,
    "sequences.udim_sum": 7,
    "sequences.filtration": 4,
    "oracle.pairs": 4,
    "oracle.cy": 6,
    "oracle.quadratic": 6,
    "actions.laws": 6,
    "actions.case_table": 6,
    "actions.consistency": 4,
    "actions.duality": 5,
    "actions.graph_counts": 6,
    "reductions.paths": 6,
    "spherical.strip": 6,
}


def _bound(key: str, t_max: int | None) -> int:
    return DEFAULT_BOUNDS[key] if t_max is None else t_max


def _first_failure(items, pred) -> str:
    for x in items:
        if not pred(x):
            return f"fails at {x}"
    return ""


# -- counts -----------------------------------------------------------------

def _counts_homological(t: int) -> str:
    for m in enumerate_thin(t):
        if classify_homological(m.to_rep()) is not classify_module(m):
            return f"t={t}: {m} classified differently"
    got, want = counts(t, homological=True), formula_counts(t)
    return "" if got == want else f"t={t}: {got} != {want}"


def _rigidity(t: int) -> str:
    for m in enumerate_thin(t):
        hom, ext1, _ = ext_dims(m.to_rep(), m.to_rep())
        q = quadratic_form(m.udim)
        if ext1 or hom != 1:
            return f"{m} has self-ext {hom, ext1}"
        if (q == 1) != (classify_module(m) is ModuleClass.Exceptional) or q not in (1, 2):
            return f"{m} has q = {q}"
    return ""


def suite_counts(t_max: int | None) -> SuiteReport:
    rep = SuiteReport("counts")
    n = _bound("counts.homological", t_max)
    errs = [e for e in parallel_map(_counts_homological, range(1, n + 1)) if e]
    rep.checks.append(Check("homological counts match 2^t-1, 2^t-t-1, 2^(t+1)-t-2, t!", n,
                            not errs, "; ".join(errs)))
    n = _bound("counts.combinatorial", t_max)
    bad = [t for t in range(1, n + 1) if counts(t, sequence_limit=min(n, 7)) != formula_counts(t)]
    rep.checks.append(Check("combinatorial counts match formulas", n, not bad,
                            f"t in {bad}" if bad else ""))
    n = _bound("counts.rigidity", t_max)
    errs = [e for e in parallel_map(_rigidity, range(1, n + 1)) if e]
    rep.checks.append(Check("thin indecomposables are rigid bricks with q in {1,2}", n,
                            not errs, "; ".join(errs)))
    rep.notes.append("spherical classification uses the proxy ext(M,M)=(1,0,1) with rank 0; "
                     "the Serre functor is not evaluated")
    return rep


# -- sequences --------------------------------------------------------------

def _bijection(t: int) -> str:
    ds = enumerate_diagrams(t)
    perms = list(itertools.permutations(range(1, t + 1)))
    if len(ds) != len(perms):
        return f"t={t}: {len(ds)} diagrams"
    for d, p in zip(ds, perms):
        if sigma(d) != p:
            return f"t={t}: round trip fails at {p}"
    return ""


def _permutation_identities(t: int) -> str:
    w = longest(t)
    for d in enumerate_diagrams(t):
        s = sigma(d)
        if lambda_perm(d) != compose(w, s):
            return f"lambda != omega sigma at {s}"
        if f_count(d) != non_inversions(s):
            return f"f != non-inversions at {s}"
        for i, j in itertools.combinations(range(1, t + 1), 2):
            vertical = d.worms[i - 1].thin.letter(s[j - 1] - 1) == "B"
            if (s[i - 1] < s[j - 1]) != vertical:
                return f"edge criterion fails at {s}, pair {(i, j)}"
    return ""


def _homological_sequences(t: int) -> str:
    for d in enumerate_diagrams(t):
        if not verify_exceptional_sequence(diagram_to_sequence(d)):
            return f"t={t}: {d} is not a full exceptional sequence"
    return ""


def _udim_sum(t: int) -> str:
    target = tuple(range(1, t + 1))
    for d in enumerate_diagrams(t):
        total = tuple(sum(w.thin.udim[v] for w in d.worms) for v in range(t))
        if total != target:
            return f"{d} sums to {total}"
    return ""


def _filtration(t: int) -> str:
    for d in enumerate_diagrams(t):
        steps = build_filtration(d)
        if [s.sub.dims[-1] for s in steps] != list(range(1, t + 1)):
            return f"{d}: ranks are wrong"
        if steps[-1].sub.dims != tuple(range(1, t + 1)):
            return f"{d}: top is not P(t)"
        dims = [(0,) * t] + [s.sub.dims for s in steps]
        graded = sorted(tuple(b - a for a, b in zip(lo, hi)) for lo, hi in zip(dims, dims[1:]))
        if graded != sorted(w.thin.udim for w in d.worms):
            return f"{d}: graded pieces do not match the worms"
    return ""


def suite_sequences(t_max: int | None) -> SuiteReport:
    rep = SuiteReport("sequences")
    for key, name, fn in [
        ("sequences.bijection", "t! diagrams and sigma round trip", _bijection),
        ("sequences.permutation_identities", "lambda = omega sigma, f = non-inversions, vertical-edge criterion", _permutation_identities),
        ("sequences.udim_sum", "udims of each diagram sum to (1..t)", _udim_sum),
        ("sequences.homological", "every diagram gives a full exceptional sequence", _homological_sequences),
        ("sequences.filtration", "filtration of P(t) found for every diagram", _filtration),
    ]:
        n = _bound(key, t_max)
        errs = [e for e in parallel_map(fn, range(1, n + 1)) if e]
        rep.checks.append(Check(name, n, not errs, "; ".join(errs)))
    rep.notes.append("vertical-edge criterion is checked on the edge ending at the start vertex of the later worm")
    return rep


# -- oracle -------------------------------------------------------------------

def _pairs_for_source(args: tuple[int, int]) -> dict:
    t, k = args
    mods = [m.to_rep() for m in enumerate_thin(t)]
    m = mods[k]
    out = {"oracle": [], "euler": [], "complex": [], "clause1": [], "clause2": [], "clause3": [],
           "converse_failures": 0, "omega3": []}
    if any(c.kernel.dim for c in projective_resolution(m, length=3)[2:]):
        out["omega3"].append(m.name)
    for n in mods:
        a = ext_dims(m, n)
        if a != ext_dims_oracle(m, n):
            out["oracle"].append(f"{m.name},{n.name}")
        if a.euler != euler_pairing(m.dims, n.dims):
            out["euler"].append(f"{m.name},{n.name}")
        c = hom_complex(m, n)
        if any(x != 0 for x in (c.d1 @ c.d0).flat):
            out["complex"].append(f"{m.name},{n.name}")
        r = check_inequalities(m, n)
        for clause in ("clause1", "clause2", "clause3"):
            if not getattr(r, clause):
                out[clause].append(f"{m.name},{n.name}")
        if not r.clause2_converse:
            out["converse_failures"] += 1
    return out


def suite_oracle(t_max: int | None) -> SuiteReport:
    rep = SuiteReport("oracle")
    n = _bound("oracle.pairs", t_max)
    merged: dict = {}
    for t in range(1, n + 1):
        for res in parallel_map(_pairs_for_source, [(t, k) for k in range(len(enumerate_thin(t)))]):
            for key, val in res.items():
                if isinstance(val, int):
                    merged[key] = merged.get(key, 0) + val
                else:
                    merged.setdefault(key, []).extend(f"t={t}:{v}" for v in val)
    for key, name in [("oracle", "complex and syzygy oracle agree on all brick pairs"),
                      ("euler", "hom - ext1 + ext2 equals the Euler pairing"),
                      ("complex", "d1 d0 = 0"),
                      ("omega3", "third syzygy vanishes (global dimension 2)"),
                      ("clause1", "hom(M,N) >= ext2(N,M)"),
                      ("clause2", "rank 0 forces hom(M,N) = ext2(N,M)"),
                      ("clause3", "rank 1 pairs with hom >= 2 have ext2(N,M) >= 1")]:
        errs = merged.get(key, [])
        rep.checks.append(Check(name, n, not errs, "; ".join(errs[:5])))
    rep.notes.append(f"converse of the rank-0 equality fails on {merged.get('converse_failures', 0)} "
                     "brick pairs (reported, not asserted)")
    n = _bound("oracle.cy", t_max)
    bad = [t for t in range(2, n + 1) if not check_cy_resolutions(t)]
    rep.checks.append(Check("resolutions of simples and P(t) = I(t)", n, not bad,
                            f"t in {bad}" if bad else ""))
    n = _bound("oracle.quadratic", t_max)
    bad = [u for t in range(1, n + 1) for u in itertools.product(range(3), repeat=t)
           if any(u) and (quadratic_form(u) != euler_pairing(u, u) or quadratic_form(u) < 1)]
    rep.checks.append(Check("q(u) = chi(u,u) >= 1 on nonzero u in {0,1,2}^t", n, not bad,
                            f"{bad[:3]}" if bad else ""))
    return rep


# -- actions ------------------------------------------------------------------

def _laws(t: int) -> str:
    w = longest(t)
    for d in enumerate_diagrams(t):
        s, f = sigma(d), f_count(d)
        for i in range(1, t):
            if can_right_mutate(d, i):
                e = right_mutate(d, i)
                if sigma(e) != right_tau(s, i) or f_count(e) != f - 1:
                    return f"mutation law fails at {s}, i={i}"
                if lambda_perm(e) != right_tau(lambda_perm(d), i):
                    return f"lambda mutation law fails at {s}, i={i}"
            if can_twist(d, i):
                e = twist_diagram(d, i)
                if sigma(e) != left_tau(i, s) or f_count(e) != f - 1:
                    return f"twist law fails at {s}, i={i}"
                if lambda_perm(e) != left_tau(t - i, compose(w, s)):
                    return f"lambda twist law fails at {s}, i={i}"
    return ""


def _case_table(t: int) -> str:
    alg = QuiverAlgebra(t)
    for m in enumerate_thin(t):
        if m.end != t:
            continue
        for i in range(1, t):
            if twist_case(i, m) is not TwistCase.from_triple(*ext_dims(simple(alg, i), m.to_rep(alg))):
                return f"case of {m} at i={i}"
    return ""


def _consistency(t: int) -> str:
    for d in enumerate_diagrams(t):
        for i in range(1, t):
            if can_right_mutate(d, i) and not check_action_consistency(d, i, "mutation"):
                return f"mutation at {sigma(d)}, i={i}"
            if can_twist(d, i) and not check_action_consistency(d, i, "twist"):
                return f"twist at {sigma(d)}, i={i}"
    return ""


def _graph_counts(t: int) -> str:
    for kind in ("mutation", "twist"):
        g = build_cayley_graph(t, kind)
        fs = {p: non_inversions(p) for p in g.nodes}
        if any(fs[e.source] - fs[e.target] != 1 for e in g.edges):
            return f"{kind} edge does not drop f by one at t={t}"
        if len(g.nodes) != len(set(g.nodes)):
            return f"duplicate nodes at t={t}"
    return ""


def suite_actions(t_max: int | None) -> SuiteReport:
    rep = SuiteReport("actions")
    for key, name, fn in [
        ("actions.laws", "sigma . tau_i, tau_i . sigma, lambda laws and f drop by one", _laws),
        ("actions.case_table", "combinatorial twist cases match ext(S(i), E)", _case_table),
        ("actions.consistency", "module-level actions match the combinatorics", _consistency),
        ("actions.graph_counts", "Cayley graph edges drop f by one", _graph_counts),
    ]:
        n = _bound(key, t_max)
        errs = [e for e in parallel_map(fn, range(1, n + 1)) if e]
        rep.checks.append(Check(name, n, not errs, "; ".join(errs)))
    n = _bound("actions.duality", t_max)
    bad = [t for t in range(1, n + 1) if not graphs_dual(t)]
    rep.checks.append(Check("sigma -> sigma^-1 maps the mutation graph to the twist graph", n,
                            not bad, f"t in {bad}" if bad else ""))
    return rep


# -- reductions -------------------------------------------------------------

def _reductions(t: int) -> str:
    target = sigma(delta_diagram(t))
    for d in enumerate_diagrams(t):
        f = f_count(d)
        for kind in ("mutation", "twist"):
            gens, path = reduction_path(d, kind)
            if len(gens) != f or sigma(path[-1]) != target:
                return f"{kind} reduction of {sigma(d)} has length {len(gens)}, ends at {sigma(path[-1])}"
    return ""


def suite_reductions(t_max: int | None) -> SuiteReport:
    rep = SuiteReport("reductions")
    n = _bound("reductions.paths", t_max)
    errs = [e for e in parallel_map(_reductions, range(1, n + 1)) if e]
    rep.checks.append(Check("both reduction paths have length f and end at Delta", n, not errs,
                            "; ".join(errs)))
    return rep


# -- spherical ----------------------------------------------------------------

def _strip(t: int) -> str:
    for m in enumerate_thin(t):
        if m.end == t:
            continue
        word, end = strip_spherical(m)
        if (end.thin.start, end.thin.end) != (1, 1):
            return f"{m} ends at {end}"
        if len(word) > 3 * t * m.length:
            return f"{m}: word of length {len(word)} exceeds budget"
    return ""


def suite_spherical(t_max: int | None) -> SuiteReport:
    rep = SuiteReport("spherical")
    n = _bound("spherical.strip", t_max)
    errs = [e for e in parallel_map(_strip, range(1, n + 1)) if e]
    rep.checks.append(Check("every 2-spherical module reaches S(1) up to shift", n, not errs,
                            "; ".join(errs)))
    rep.notes.append("the last leg moves S(j+1) to S(j) with T_j then T_(j+1); no conjugated twist is used")
    return rep


SUITES: dict[str, Callable[[int | None], SuiteReport]] = {
    "counts": suite_counts,
    "sequences": suite_sequences,
    "oracle": suite_oracle,
    "actions": suite_actions,
    "reductions": suite_reductions,
    "spherical": suite_spherical,
}


def run_suite(name: str, t_max: int | None = None) -> list[SuiteReport]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}")
    if t_max is not None:
        prefixes = tuple(f"{n}." for n in names)
        over = [k for k, v in DEFAULT_BOUNDS.items() if k.startswith(prefixes) and t_max > v]
        if over:
            print(f"warning: --t-max {t_max} exceeds the default bound for {', '.join(over)}; "
                  "this may take a long time", file=sys.stderr)
    return [SUITES[n](t_max) for n in names]
