from collections import Counter
from itertools import combinations

import pytest

from circb1f.balance import classify_balance, pair_types
from circb1f.bases import BASE_TYPES, BASES
from circb1f.errors import ConditionCNotSatisfied, ParameterOutOfRange, UnsupportedBase, WrongConnectionSet
from circb1f.graph import CycleType, edge, make_circulant, union_cycles
from circb1f.onethree import (
    base_factorisation,
    condition_c_presentation,
    construct_13,
    expected_types_13,
    extend_k,
    extend_once,
    has_gap,
    predict_types,
    satisfies_condition_c,
    select_base,
    vertex_condition,
)
from circb1f.onetwo import construct_12_order8

R, B, G, Y = range(4)


def types_of(F):
    return {str(t) for t in classify_balance(F).types}


@pytest.mark.parametrize("key", sorted(BASES))
def test_base_types(key):
    F = base_factorisation(*key)
    rep = classify_balance(F)
    assert rep.m == key[0]
    assert rep.types == {CycleType.parse(t) for t in BASE_TYPES[key]}


def test_base_22_has_8_8_6():
    assert "[8^2,6]" in types_of(base_factorisation(6, 22))


def test_unsupported_base():
    with pytest.raises(UnsupportedBase):
        base_factorisation(2, 18)
    with pytest.raises(UnsupportedBase):
        base_factorisation(4, 12)


def test_has_gap_examples():
    F = base_factorisation(2, 14)
    assert has_gap(F[R], 0)
    assert not has_gap(F[R], 2)
    for v in range(14):
        owner = next(i for i in range(4) if (v, (v + 1) % 14) in F[i] or ((v + 1) % 14, v) in F[i])
        assert not has_gap(F[owner], v)


def test_has_gap_needs_13():
    with pytest.raises(WrongConnectionSet):
        has_gap(construct_12_order8()[0], 0, (1, 2))
    with pytest.raises(WrongConnectionSet):
        satisfies_condition_c(construct_12_order8())


@pytest.mark.parametrize("key", [(2, 14), (2, 16), (3, 18), (3, 20), (6, 20), (6, 22)])
def test_condition_c_extension_bases(key):
    cert = satisfies_condition_c(base_factorisation(*key))
    assert cert is not None
    assert cert.order == (R, B, G, Y)
    assert cert.inner_edges


@pytest.mark.parametrize("key", [(2, 10), (2, 12), (3, 12), (3, 14), (3, 16), (6, 18)])
def test_condition_c_fails_without_relabelling(key):
    assert satisfies_condition_c(base_factorisation(*key)) is None


def test_condition_c_certificate_content():
    F = base_factorisation(2, 14)
    cert = satisfies_condition_c(F)
    fs = [F[i] for i in cert.order]
    assert all(has_gap(f, v) for v, f in enumerate(fs))
    assert (2, 3) in fs[0] and (1, 2) in fs[3]
    assert [(g.factor, g.position) for g in cert.gaps] == [(0, 0), (1, 1), (2, 2), (3, 3)]


def test_12_three_balanced_base_has_no_presentation():
    # every automorphism of Circ(12,{1,3}) was tried
    assert condition_c_presentation(base_factorisation(3, 12)) is None


def test_presentation_keeps_types():
    F = base_factorisation(2, 10)
    G, cert, mapping = condition_c_presentation(F)
    assert satisfies_condition_c(G) == cert
    assert pair_types(G) == pair_types(F)
    assert sorted(mapping) == list(range(10))


def test_extend_once_examples():
    F = extend_once(base_factorisation(2, 14))
    assert F.graph.order == 18
    assert types_of(F) == {"[18]", "[14,4]"} and classify_balance(F).m == 2
    F = extend_once(base_factorisation(2, 16))
    assert types_of(F) == {"[20]", "[16,4]"}
    F = extend_once(extend_once(base_factorisation(2, 14)))
    assert F.graph == make_circulant(22, (1, 3))
    assert satisfies_condition_c(F).order == (R, B, G, Y)


def test_extend_requires_condition_c():
    with pytest.raises(ConditionCNotSatisfied):
        extend_once(base_factorisation(3, 12))
    with pytest.raises(ConditionCNotSatisfied):
        predict_types(base_factorisation(3, 12), 1)
    with pytest.raises(ConditionCNotSatisfied):
        vertex_condition(base_factorisation(3, 12), (0, 1))


def test_extension_keeps_factor_indices():
    F = base_factorisation(3, 18)
    E = extend_once(F)
    # factor i of the extension contains the two inserted edges of threshold i+1
    for i in range(4):
        t = i + 1
        assert (t, t + 3) in E[i] and (t + 1, t + 2) in E[i]


PRESENTABLE = [k for k in sorted(BASES) if k != (3, 12)]


@pytest.mark.parametrize("key", PRESENTABLE)
def test_extension_soundness(key):
    G, cert, _ = condition_c_presentation(base_factorisation(*key))
    for k in range(11):
        E = extend_k(G, k, cert)
        assert E.graph.order == key[1] + 4 * k
        assert satisfies_condition_c(E) is not None
        assert pair_types(E) == predict_types(G, k, cert)


# expected vertex conditions: pair -> length of the cycle carrying its special vertices
VERTEX_CONDITIONS = {
    (2, 16): {(R, B): 12, (B, G): 12, (G, Y): 16, (R, G): 12, (B, Y): 16, (R, Y): 16},
    (2, 14): {(R, B): 14, (B, G): 10, (G, Y): 10, (R, G): 10, (B, Y): 14, (R, Y): 14},
    (3, 18): {(R, B): 18, (B, G): 14, (G, Y): 18, (R, G): 12, (B, Y): 12, (R, Y): 14},
    (3, 20): {(R, B): 14, (B, G): 14, (G, Y): 16, (R, G): 12, (B, Y): 12, (R, Y): 16},
    (6, 20): {(R, B): 14, (B, G): 16, (G, Y): 12, (R, G): 12, (B, Y): 10, (R, Y): 20},
    (6, 22): {(R, B): 18, (B, G): 16, (G, Y): 22, (R, G): 8, (B, Y): 14, (R, Y): 14},
}
SPECIAL = {(R, B): (1,), (B, G): (2,), (G, Y): (3,), (R, G): (1, 2), (B, Y): (2, 3), (R, Y): (0,)}


@pytest.mark.parametrize("key", sorted(VERTEX_CONDITIONS))
def test_vertex_conditions(key):
    F = base_factorisation(*key)
    for pair, length in VERTEX_CONDITIONS[key].items():
        vc = vertex_condition(F, pair)
        assert vc.special == SPECIAL[pair]
        assert vc.shared
        assert vc.cycle_lengths[0] == length


def test_vertex_condition_text():
    vc = vertex_condition(base_factorisation(2, 16), (R, B))
    assert vc.describe() == "1 on a 12-cycle"
    vc = vertex_condition(base_factorisation(6, 20), (R, G))
    assert vc.describe() == "1 and 2 on a 12-cycle"


def test_predict_examples():
    got = Counter(str(t) for t in predict_types(base_factorisation(2, 14), 2).values())
    assert got == Counter({"[22]": 3, "[18,4]": 3})
    got = Counter(str(t) for t in predict_types(base_factorisation(3, 20), 1).values())
    assert got == Counter({"[20,4]": 2, "[18,6]": 2, "[16,8]": 2})
    F = base_factorisation(3, 18)
    assert predict_types(F, 0) == pair_types(F)


def test_predict_split_rule():
    # a pair whose two special vertices sit on different cycles grows by 2k twice
    hits = 0
    for key in PRESENTABLE:
        G, cert, _ = condition_c_presentation(base_factorisation(*key))
        for pair in combinations(range(4), 2):
            vc = vertex_condition(G, pair, cert)
            if not vc.shared:
                hits += 1
                E = extend_k(G, 3, cert)
                want = sorted(len(c) for c in union_cycles(G[pair[0]], G[pair[1]]))
                for n in vc.cycle_lengths:
                    want.remove(n)
                    want.append(n + 6)
                assert sorted(pair_types(E)[pair]) == sorted(want)
    assert hits > 0


# sets S and the inserted paths, by certificate positions
SURGERY = {
    (0, 1): [((1,), (1, 4, 3, 2, 5))],
    (1, 2): [((2,), (2, 5, 4, 3, 6))],
    (2, 3): [((3,), (3, 6, 5, 4, 7))],
    (0, 2): [((1,), (1, 4, 5)), ((2,), (2, 3, 6))],
    (1, 3): [((2,), (2, 5, 6)), ((3,), (3, 4, 7))],
    (0, 3): [((0, 3, 2, 1, 4), (0, 3, 2, 1, 4, 7, 6, 5, 8))],
}


def union_edge_set(F, i, j):
    return {frozenset(e) for e in F[i].edges()} | {frozenset(e) for e in F[j].edges()}


def neighbours_in(edges, v):
    return [next(iter(e - {v})) for e in edges if v in e]


@pytest.mark.parametrize("key", PRESENTABLE)
def test_path_surgery(key):
    F, cert, _ = condition_c_presentation(base_factorisation(*key))
    E = extend_once(F, cert)
    for (p, q), paths in SURGERY.items():
        i, j = cert.order[p], cert.order[q]
        S = set().union(*(set(old) for old, _ in paths))
        lo = min(S)

        def f(v):
            return v if v < lo else v + 4

        old_edges = union_edge_set(F, i, j)
        new_edges = union_edge_set(E, i, j)
        for e in old_edges:
            if not e & S:
                assert frozenset(map(f, e)) in new_edges
        for old, new in paths:
            for a, b in zip(old, old[1:]):
                assert frozenset((a, b)) in old_edges
            for a, b in zip(new, new[1:]):
                assert frozenset((a, b)) in new_edges
            ends_old = [w for w in neighbours_in(old_edges, old[0]) if w not in old]
            ends_old += [w for w in neighbours_in(old_edges, old[-1]) if w not in old]
            v1, v2 = ends_old[0], ends_old[-1]
            hooks = [
                {frozenset((f(x), new[0])), frozenset((new[-1], f(y)))}
                for x, y in ((v1, v2), (v2, v1))
            ]
            assert any(h <= new_edges for h in hooks)


@pytest.mark.parametrize("m, lo", [(2, 5), (3, 6), (6, 9)])
def test_construct_13_sweep(m, lo):
    for n in range(lo, 41):
        F = construct_13(m, n)
        assert F.graph == make_circulant(2 * n, (1, 3))
        assert classify_balance(F).m == m
        assert pair_types(F) == expected_types_13(m, n)


def test_construct_13_examples():
    F = construct_13(2, 11)
    assert select_base(2, 11) == (14, 2)
    assert types_of(F) == {"[22]", "[18,4]"}
    assert construct_13(6, 9).edge_lists() == base_factorisation(6, 18).edge_lists()
    assert select_base(6, 11) == (22, 0)
    assert select_base(6, 13) == (22, 1)
    assert select_base(3, 7) == (14, 0)


@pytest.mark.parametrize("m, n", [(3, 5), (2, 4), (6, 8), (6, 5)])
def test_construct_13_nonexistent(m, n):
    with pytest.raises(ParameterOutOfRange) as info:
        construct_13(m, n)
    assert "nonexistent" in info.value.reason


@pytest.mark.parametrize("m, n", [(2, 3), (3, 2)])
def test_construct_13_degenerate(m, n):
    with pytest.raises(ParameterOutOfRange) as info:
        construct_13(m, n)
    assert "degenerate" in info.value.reason


def test_construct_13_bad_m():
    with pytest.raises(ParameterOutOfRange):
        construct_13(4, 10)
