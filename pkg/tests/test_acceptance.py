"""Acceptance criteria 1-11, one test each; a summary line per criterion is printed at the end."""

import itertools
import math

from auslander.actions import (
    apply_word, build_cayley_graph, can_right_mutate, can_twist,
    check_action_consistency, reduction_path, strip_spherical, ShiftedThin,
)
from auslander.classify import ModuleClass, classify_homological, classify_module, enumerate_thin
from auslander.homcalc import check_inequalities, euler_pairing, ext_dims, ext_dims_oracle, find_isomorphism
from auslander.repcore import QuiverAlgebra, ThinModule, projective
from auslander.worms import (
    delta_diagram, diagram_from_permutation, diagram_to_sequence, enumerate_diagrams,
    f_count, sigma, verify_exceptional_sequence, build_filtration,
)


def brick_pairs(t_max=4):
    for t in range(1, t_max + 1):
        alg = QuiverAlgebra(t)
        reps = [m.to_rep(alg) for m in enumerate_thin(t)]
        yield from itertools.product(reps, repeat=2)


def edges(graph, convention):
    return {(e["from"], e["to"], e["gen"]) for e in graph.to_json(convention)["edges"]}


def test_criterion_01_counts(criterion):
    with criterion(1, "counts: homological t<=6, combinatorial t<=16"):
        for t in range(1, 17):
            mods = enumerate_thin(t)
            exc = [m for m in mods if classify_module(m) is ModuleClass.Exceptional]
            sph = [m for m in mods if classify_module(m) is ModuleClass.Spherical2]
            assert (len(exc), len(sph), len(mods)) == (2 ** t - 1, 2 ** t - t - 1, 2 ** (t + 1) - t - 2)
            if t <= 6:
                alg = QuiverAlgebra(t)
                for m in mods:
                    assert classify_homological(m.to_rep(alg)) is classify_module(m), str(m)


def test_criterion_02_oracle_equivalence(criterion):
    with criterion(2, "ext_dims equals the syzygy oracle on all brick pairs, t<=4"):
        n = 0
        for m, k in brick_pairs():
            assert ext_dims(m, k) == ext_dims_oracle(m, k)
            n += 1
        assert n == sum((2 ** (t + 1) - t - 2) ** 2 for t in range(1, 5))


def test_criterion_03_euler(criterion):
    with criterion(3, "hom - ext1 + ext2 equals the Euler pairing on all brick pairs, t<=4"):
        for m, k in brick_pairs():
            assert ext_dims(m, k).euler == euler_pairing(m.dims, k.dims)


def test_criterion_04_inequalities(criterion):
    with criterion(4, "hom(M,N) >= ext2(N,M); rank 0 forces equality, t<=4"):
        for m, k in brick_pairs():
            r = check_inequalities(m, k)
            assert r.clause1 and r.clause2


def test_criterion_05_bijection(criterion):
    with criterion(5, "t! diagrams with sigma round trip (t<=7), sequences verified (t<=5)"):
        for t in range(1, 8):
            ds = enumerate_diagrams(t)
            assert len(ds) == math.factorial(t)
            assert {sigma(d) for d in ds} == set(itertools.permutations(range(1, t + 1)))
            for p in itertools.permutations(range(1, t + 1)):
                assert sigma(diagram_from_permutation(p)) == p
            if t <= 5:
                for d in ds:
                    assert verify_exceptional_sequence(diagram_to_sequence(d)), str(d)


def test_criterion_06_hexagons(criterion):
    with criterion(6, "t=3 mutation and twist hexagons"):
        assert edges(build_cayley_graph(3, "mutation"), "sigma") == {
            ("123", "213", 1), ("123", "132", 2), ("213", "231", 2),
            ("132", "312", 1), ("231", "321", 1), ("312", "321", 2)}
        assert edges(build_cayley_graph(3, "twist"), "sigma") == {
            ("123", "213", 1), ("123", "132", 2), ("213", "312", 2),
            ("132", "231", 1), ("312", "321", 1), ("231", "321", 2)}


def test_criterion_07_t4_figures(criterion):
    with criterion(7, "t=4 graphs: 24 nodes, 36 edges, lambda spot edges from 4321"):
        spot = {("4321", "3421", 1), ("4321", "4231", 2), ("4321", "4312", 3)}
        for kind in ("mutation", "twist"):
            g = build_cayley_graph(4, kind)
            assert len(g.nodes) == 24 and len(g.edges) == 36
            assert spot <= edges(g, "lambda")


def test_criterion_08_reductions(criterion):
    with criterion(8, "both reduction paths have length f and end at Delta, t<=6"):
        for t in range(1, 7):
            target = delta_diagram(t)
            for d in enumerate_diagrams(t):
                for kind, ok in (("mutation", can_right_mutate), ("twist", can_twist)):
                    gens, path = reduction_path(d, kind)
                    assert len(gens) == f_count(d)
                    assert all(ok(x, i) for x, i in zip(path, gens))
                    assert path[-1] == target


def test_criterion_09_action_consistency(criterion):
    with criterion(9, "module-level mutation and twist agree with the diagrams, t<=4"):
        for t in range(2, 5):
            for d in enumerate_diagrams(t):
                for i in range(1, t):
                    if can_right_mutate(d, i):
                        assert check_action_consistency(d, i, "mutation"), (sigma(d), i)
                    if can_twist(d, i):
                        assert check_action_consistency(d, i, "twist"), (sigma(d), i)


def test_criterion_10_spherical_reduction(criterion):
    with criterion(10, "every 2-spherical module is twisted to S(1) up to shift, t<=6"):
        for t in range(2, 7):
            s1 = ThinModule(t, 1, 1, "")
            for m in enumerate_thin(t):
                if m.end == t:
                    continue
                word, end = strip_spherical(m)
                assert end.thin == s1
                assert apply_word(word, ShiftedThin(m)) == end


def test_criterion_11_filtration(criterion):
    with criterion(11, "filtration of P(t) for every diagram, t<=4"):
        for t in range(1, 5):
            pt = projective(QuiverAlgebra(t), t)
            for d in enumerate_diagrams(t):
                steps = build_filtration(d)
                prev = (0,) * t
                pieces = []
                for step in steps:
                    pieces.append(tuple(a - b for a, b in zip(step.sub.dims, prev)))
                    prev = step.sub.dims
                assert sorted(pieces) == sorted(w.thin.udim for w in d.worms)
                assert find_isomorphism(steps[-1].sub, pt) is not None
