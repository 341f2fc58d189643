import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from auslander.actions import (
    ShiftedThin, TwistCase, TwistWord, apply_twist_shifted, apply_word,
    build_cayley_graph, can_right_mutate, can_twist, check_action_consistency,
    graphs_dual, reduce_to_delta_by_mutations, reduce_to_delta_by_twists,
    reduced_word, reduction_path, right_mutate, right_mutate_module,
    strip_spherical, twist_case, twist_diagram, twist_module_simple,
)
from auslander.classify import enumerate_thin
from auslander.errors import AuslanderError, NotApplicable, Unsupported
from auslander.homcalc import ext_dims
from auslander.repcore import QuiverAlgebra, ThinModule, delta, nabla, simple, thin_canonical_form
from auslander.worms import (
    WormDiagram, compose, delta_diagram, diagram_from_permutation,
    enumerate_diagrams, f_count, inversions, lambda_perm, left_tau, longest,
    nabla_diagram, right_tau, sigma, tau,
)
from strategies import permutations

GOLDEN = json.loads((Path(__file__).parent / "golden" / "t4_figures.json").read_text())

HEXAGON_MUTATIONS = {("123", "213", 1), ("123", "132", 2), ("213", "231", 2),
                     ("132", "312", 1), ("231", "321", 1), ("312", "321", 2)}
HEXAGON_TWISTS = {("123", "213", 1), ("123", "132", 2), ("213", "312", 2),
                  ("132", "231", 1), ("312", "321", 1), ("231", "321", 2)}


def perm(text):
    return tuple(int(c) for c in text)


def edge_set(graph, convention="sigma"):
    return {(e["from"], e["to"], e["gen"]) for e in graph.to_json(convention)["edges"]}


def thin(text, t):
    return ThinModule.parse(text, t)


# -- right mutations -------------------------------------------------------------

@pytest.mark.parametrize("t", range(2, 6))
def test_mutation_applicability_on_named_diagrams(t):
    for i in range(1, t):
        assert not can_right_mutate(delta_diagram(t), i)
        assert can_right_mutate(nabla_diagram(t), i)


def test_mutation_examples():
    d = diagram_from_permutation(perm("213"))
    assert can_right_mutate(d, 2) and not can_right_mutate(d, 1)
    for src, dst, i in [("123", "213", 1), ("213", "231", 2), ("312", "321", 2)]:
        assert sigma(right_mutate(diagram_from_permutation(perm(src)), i)) == perm(dst)


def test_mutation_index_range():
    with pytest.raises(ValueError):
        can_right_mutate(delta_diagram(3), 3)


def test_inapplicable_mutation_raises():
    with pytest.raises(NotApplicable):
        right_mutate(delta_diagram(3), 1)


@pytest.mark.parametrize("t", range(2, 7))
def test_right_action_law(t):
    for d in enumerate_diagrams(t):
        for i in range(1, t):
            if can_right_mutate(d, i):
                e = right_mutate(d, i)
                assert sigma(e) == right_tau(sigma(d), i)
                assert lambda_perm(e) == right_tau(lambda_perm(d), i)
                assert f_count(e) == f_count(d) - 1


def test_module_mutation_examples():
    alg = QuiverAlgebra(3)
    out = right_mutate_module(thin("1:AB", 3).to_rep(alg), simple(alg, 3))
    assert thin_canonical_form(out) == thin("1:AA", 3)
    out = right_mutate_module(nabla(alg, 3), nabla(alg, 2))
    assert thin_canonical_form(out) == thin("1:AB", 3)
    with pytest.raises(NotApplicable):
        right_mutate_module(delta(alg, 2), delta(alg, 3))


# -- twists ----------------------------------------------------------------------

@pytest.mark.parametrize("t", range(2, 6))
def test_twist_applicability_on_named_diagrams(t):
    for i in range(1, t):
        assert can_twist(nabla_diagram(t), i)
        assert not can_twist(delta_diagram(t), i)


@pytest.mark.parametrize("i, worm, case", [(2, "2:B", TwistCase.H), (2, "3:", TwistCase.E),
                                           (2, "1:AB", TwistCase.HE), (1, "1:AA", TwistCase.Blocked),
                                           (1, "3:", TwistCase.O)])
def test_twist_case_examples(i, worm, case):
    m = thin(worm, 3)
    assert twist_case(i, m) is case
    assert TwistCase.from_triple(*ext_dims(simple(QuiverAlgebra(3), i), m.to_rep())) is case


@pytest.mark.parametrize("t", range(2, 7))
def test_twist_case_table_matches_ext(t):
    alg = QuiverAlgebra(t)
    for m in enumerate_thin(t):
        if m.end != t:
            continue
        rep = m.to_rep(alg)
        for i in range(1, t):
            assert twist_case(i, m) is TwistCase.from_triple(*ext_dims(simple(alg, i), rep)), (i, str(m))


def test_twist_on_hexagon_node_213():
    d = diagram_from_permutation(perm("213"))
    assert can_twist(d, 2)
    e = twist_diagram(d, 2)
    assert sigma(e) == perm("312")
    assert [str(w) for w in e.worms] == ["3:", "1:BA", "2:A"]
    assert [twist_case(2, w) for w in d.worms] == [TwistCase.H, TwistCase.HE, TwistCase.E]
    assert check_action_consistency(d, 2, "twist")


@pytest.mark.parametrize("src, dst, i", [("123", "213", 1), ("231", "321", 2)])
def test_twist_examples(src, dst, i):
    assert sigma(twist_diagram(diagram_from_permutation(perm(src)), i)) == perm(dst)


def test_blocked_twist_raises():
    with pytest.raises(NotApplicable):
        twist_diagram(delta_diagram(3), 1)


@pytest.mark.parametrize("t", range(2, 7))
def test_left_action_law(t):
    w = longest(t)
    for d in enumerate_diagrams(t):
        for i in range(1, t):
            if can_twist(d, i):
                e = twist_diagram(d, i)
                assert sigma(e) == left_tau(i, sigma(d))
                assert lambda_perm(e) == left_tau(t - i, lambda_perm(d))
                assert f_count(e) == f_count(d) - 1


def test_module_twist_examples():
    alg = QuiverAlgebra(3)
    assert thin_canonical_form(twist_module_simple(2, nabla(alg, 2))) == thin("3:", 3)
    assert thin_canonical_form(twist_module_simple(2, simple(alg, 3))) == thin("2:A", 3)
    with pytest.raises(NotApplicable):
        twist_module_simple(1, delta(alg, 3))


@pytest.mark.parametrize("t", range(2, 4))
@pytest.mark.parametrize("kind", ["mutation", "twist"])
def test_action_consistency_exhaustive(t, kind):
    applicable = can_right_mutate if kind == "mutation" else can_twist
    for d in enumerate_diagrams(t):
        for i in range(1, t):
            if applicable(d, i):
                assert check_action_consistency(d, i, kind), (sigma(d), i)


# -- shifted objects and spherical modules ------------------------------------------

def test_twist_of_the_simple_itself_shifts():
    s1 = ShiftedThin(thin("1-1:", 3))
    assert apply_twist_shifted(1, s1) == ShiftedThin(thin("1-1:", 3), -1)
    assert apply_twist_shifted(1, s1, inverse=True) == ShiftedThin(thin("1-1:", 3), 1)


def test_twist_of_neighbouring_simple():
    assert apply_twist_shifted(1, ShiftedThin(thin("2-2:", 3))) == ShiftedThin(thin("1-2:A", 3))


def test_twist_fixes_orthogonal_modules():
    m = ShiftedThin(thin("3-3:", 4), 2)
    assert apply_twist_shifted(1, m) == m


def test_unsupported_configuration_is_reported():
    with pytest.raises(Unsupported):
        apply_twist_shifted(1, ShiftedThin(thin("1-2:A", 3)))


def test_twist_word_validation():
    assert str(TwistWord(3, (1, -2))) == "T1 T2^-1"
    with pytest.raises(ValueError):
        TwistWord(3, (3,))


@given(st.integers(2, 5), st.data())
def test_inverse_twist_undoes_twist(t, data):
    m = data.draw(st.sampled_from(enumerate_thin(t)))
    i = data.draw(st.integers(1, t - 1))
    obj = ShiftedThin(m)
    try:
        forward = apply_twist_shifted(i, obj)
    except AuslanderError:
        return
    try:
        back = apply_twist_shifted(i, forward, inverse=True)
    except Unsupported:
        return
    assert back == obj


def test_strip_examples():
    word, end = strip_spherical(thin("1-1:", 3))
    assert word.gens == () and end == ShiftedThin(thin("1-1:", 3))
    word, end = strip_spherical(thin("1-2:B", 3))
    assert word.gens[0] == 1
    assert (end.thin.start, end.thin.end) == (1, 1)
    word, end = strip_spherical(thin("1-2:A", 3))
    assert word.gens[0] == -1
    assert (end.thin.start, end.thin.end) == (1, 1)


@pytest.mark.parametrize("t", range(2, 6))
def test_strip_reaches_first_simple(t):
    for m in enumerate_thin(t):
        if m.end == t:
            continue
        word, end = strip_spherical(m)
        assert end.thin == thin("1-1:", t)
        assert apply_word(word, ShiftedThin(m)) == end
        assert len(word) <= 3 * t * m.length


def test_strip_rejects_rank_one():
    with pytest.raises(ValueError):
        strip_spherical(thin("1:AA", 3))


# -- reductions --------------------------------------------------------------------

def test_reduced_word_examples():
    assert reduced_word((1, 2, 3)) == []
    assert reduced_word((3, 2, 1)) == [1, 2, 1]
    assert reduced_word(tau(3, 2)) == [2]


@given(permutations(t_max=7))
def test_reduced_word_factorises(p):
    word = reduced_word(p)
    assert len(word) == inversions(p)
    q = tuple(range(1, len(p) + 1))
    for i in reversed(word):
        q = right_tau(q, i)
    assert q == p


def test_reduction_examples():
    gens, path = reduction_path(diagram_from_permutation(perm("123")), "mutation")
    assert gens == [1, 2, 1]
    assert [sigma(d) for d in path] == [perm(x) for x in ("123", "213", "231", "321")]
    gens, path = reduction_path(diagram_from_permutation(perm("123")), "twist")
    assert gens == [1, 2, 1]
    assert [sigma(d) for d in path] == [perm(x) for x in ("123", "213", "312", "321")]
    assert reduce_to_delta_by_mutations(delta_diagram(3)) == []
    assert reduce_to_delta_by_twists(delta_diagram(3)) == []
    d = diagram_from_permutation(perm("213"))
    gens, path = reduction_path(d, "twist")
    assert len(gens) == 2 and path[-1] == delta_diagram(3)


@pytest.mark.parametrize("t", range(1, 7))
@pytest.mark.parametrize("kind", ["mutation", "twist"])
def test_reductions_end_at_delta(t, kind):
    for d in enumerate_diagrams(t):
        gens, path = reduction_path(d, kind)
        assert len(gens) == f_count(d)
        assert path[-1] == delta_diagram(t)
        assert [f_count(x) for x in path] == list(range(f_count(d), -1, -1))


def test_unknown_reduction_kind():
    with pytest.raises(ValueError):
        reduction_path(delta_diagram(2), "sideways")


# -- graphs ------------------------------------------------------------------------

def test_t3_hexagons():
    mut, tw = build_cayley_graph(3, "mutation"), build_cayley_graph(3, "twist")
    assert len(mut.nodes) == len(tw.nodes) == 6
    assert edge_set(mut) == HEXAGON_MUTATIONS
    assert edge_set(tw) == HEXAGON_TWISTS


def test_t4_graphs_match_figures():
    mut, tw = build_cayley_graph(4, "mutation"), build_cayley_graph(4, "twist")
    assert len(mut.nodes) == len(tw.nodes) == 24
    assert len(mut.edges) == len(tw.edges) == 36
    expect_mut = {(e["from"], e["to"], e["gen"]) for e in GOLDEN["mutation_edges"]}
    expect_tw = {(e["from"], e["to"], e["gen"]) for e in GOLDEN["twist_edges"]}
    assert edge_set(mut, "lambda") == expect_mut
    assert edge_set(tw, "lambda") == expect_tw


@pytest.mark.parametrize("t", range(1, 6))
def test_graph_edges_drop_f(t):
    for kind in ("mutation", "twist"):
        g = build_cayley_graph(t, kind)
        assert len(g.nodes) == len(set(g.nodes))
        for e in g.edges:
            src, dst = diagram_from_permutation(e.source), diagram_from_permutation(e.target)
            assert f_count(dst) == f_count(src) - 1


@pytest.mark.parametrize("t", range(1, 6))
def test_graphs_are_dual(t):
    assert graphs_dual(t)


def test_graph_serialisation():
    g = build_cayley_graph(3, "twist")
    obj = g.to_json("lambda")
    assert obj["kind"] == "twist" and obj["label"] == "lambda" and len(obj["nodes"]) == 6
    dot = g.to_dot()
    assert dot.startswith('digraph "twist_t3" {')
    assert '"213" -> "312" [gen=2, kind=twist, label="2"];' in dot
    with pytest.raises(ValueError):
        g.label((1, 2, 3), "rho")


def test_graph_unknown_kind():
    with pytest.raises(ValueError):
        build_cayley_graph(3, "braid")


def test_parallel_graph_matches_serial(monkeypatch):
    serial = build_cayley_graph(4, "twist")
    monkeypatch.setenv("AUSLANDER_THREADS", "2")
    assert build_cayley_graph(4, "twist") == serial
