import pytest

from circb1f.balance import classify_balance, pair_types
from circb1f.errors import InvalidParams
from circb1f.graph import CycleType, power_type
from circb1f.onetwo import construct_12_rotation
from circb1f.rotation import RotationParams, Variant, construct_general, expected_types_general

CASES = [
    (ell, a, v)
    for ell in (2, 4, 6, 8)
    for a in (2, 3, 4)
    for v in Variant
]


@pytest.mark.parametrize("ell, a, variant", CASES)
def test_types(ell, a, variant):
    p = RotationParams(ell, a, variant)
    F = construct_general(p)
    rep = classify_balance(F)
    assert rep.m == 2
    want = {power_type((a * (ell + 4), 1), (4, a * (ell // 2 - 1))), power_type((6, ell * a // 2))}
    assert rep.types == want == expected_types_general(p)


def test_examples():
    F = construct_general(RotationParams(4, 2, Variant.SPAN))
    assert F.graph.connections == (1, 4) and F.graph.order == 24
    assert {str(t) for t in classify_balance(F).types} == {"[16,4^2]", "[6^4]"}
    F = construct_general(RotationParams(2, 3))
    assert F.graph.connections == (1, 2)
    assert {str(t) for t in classify_balance(F).types} == {"[18]", "[6^3]"}
    F = construct_general(RotationParams(4, 2, Variant.DOUBLE_SPAN))
    assert F.graph.connections == (1, 8)
    assert {str(t) for t in classify_balance(F).types} == {"[16,4^2]", "[6^4]"}


@pytest.mark.parametrize("ell, a, variant", CASES)
def test_rotation_equivariance(ell, a, variant):
    F = construct_general(RotationParams(ell, a, variant))
    N = F.graph.order
    sets = [frozenset(frozenset(e) for e in f.edges()) for f in F]
    image = [frozenset(frozenset(((u + ell) % N, (v + ell) % N)) for u, v in f.edges()) for f in F]
    assert image[0] == sets[1] and image[1] == sets[2] and image[2] == sets[0]
    assert image[3] == sets[3]
    t = pair_types(F)
    assert t[(0, 1)] == t[(0, 2)] == t[(1, 2)]
    assert t[(0, 3)] == t[(1, 3)] == t[(2, 3)]


@pytest.mark.parametrize("ell, a", [(4, 2), (6, 3), (8, 2)])
def test_window_paths(ell, a):
    # on each window of 3*ell vertices, F1 u F4 has ell/2-1 four-cycles and one path
    F = construct_general(RotationParams(ell, a))
    N, w = F.graph.order, 3 * ell
    for j in range(a):
        lo, hi = j * w, j * w + w
        inside = [
            (u, v) for f in (F[0], F[3]) for u, v in f.edges()
            if lo <= u < hi and lo <= v < hi
        ]
        adj = {x: [] for x in range(lo, hi)}
        for u, v in inside:
            adj[u].append(v)
            adj[v].append(u)
        seen, comps = set(), []
        for s in range(lo, hi):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(comp)
        cycles = [c for c in comps if all(len(adj[x]) == 2 for x in c)]
        paths = [c for c in comps if c not in cycles]
        assert sorted(len(c) for c in cycles) == [4] * (ell // 2 - 1)
        assert len(paths) == 1
        ends = sorted(x for x in paths[0] if len(adj[x]) == 1)
        assert ends == [lo, hi - 1]


def test_span_two_matches_onetwo_types():
    for a in (2, 3, 4):
        n = 3 * a
        g = classify_balance(construct_general(RotationParams(2, a)))
        h = classify_balance(construct_12_rotation(n))
        assert g.types == h.types


@pytest.mark.parametrize(
    "ell, a, variant",
    [(3, 2, Variant.SPAN), (0, 2, Variant.SPAN), (4, 1, Variant.DOUBLE_SPAN), (2, 1, Variant.SPAN), (4, 0, Variant.SPAN)],
)
def test_invalid(ell, a, variant):
    with pytest.raises(InvalidParams):
        RotationParams(ell, a, variant)


def test_variant_from_string():
    assert RotationParams(4, 2, "double-span").variant is Variant.DOUBLE_SPAN
