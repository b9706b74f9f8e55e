"""Circ(2n, {1,3}): gaps, Condition C, the +4 extension and type prediction.

A Condition-C certificate lists factor indices in the order F1..F4.  The
extension inserts four new vertices after the window 0..4: the i-th factor
in certificate order keeps endpoints below ``i``, shifts the others by 4 and
gains the edges ``{i, i+3}`` and ``{i+1, i+2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .bases import BASES
from .errors import ConditionCNotSatisfied, ParameterOutOfRange, UnsupportedBase, WrongConnectionSet
from .graph import (
    CycleType,
    OneFactor,
    OneFactorisation,
    automorphisms,
    edge,
    make_circulant,
    union_cycles,
    validate_factorisation,
)
from .balance import pair_types


def _require_onethree(order: int, connections) -> None:
    if tuple(connections) != (1, 3) or order < 8:
        raise WrongConnectionSet("(1, 3) on at least 8 vertices", tuple(connections))


def gap_edges(v: int, order: int) -> list[tuple[int, int]]:
    """The four edges whose absence makes a gap at ``(v, v+1)``."""
    pairs = [(v, v + 1), (v - 2, v + 1), (v, v + 3), (v - 1, v + 2)]
    return [edge(a % order, b % order) for a, b in pairs]


def has_gap(f: OneFactor, v: int, connections=(1, 3)) -> bool:
    _require_onethree(f.order, connections)
    return not any(e in f for e in gap_edges(v, f.order))


@dataclass(frozen=True)
class GapWitness:
    factor: int
    position: int


@dataclass(frozen=True)
class ConditionCCertificate:
    order: tuple[int, int, int, int]  # factor indices playing F1..F4
    inner_edges: bool  # {0,3} in F4 and {1,4} in F1

    @property
    def gaps(self) -> list[GapWitness]:
        return [GapWitness(f, v) for v, f in enumerate(self.order)]

    def position(self, factor: int) -> int:
        return self.order.index(factor)


def satisfies_condition_c(F: OneFactorisation) -> ConditionCCertificate | None:
    """Return the first factor ordering realising Condition C, or None."""
    g = F.graph
    _require_onethree(g.order, g.connections)
    if len(F) != 4:
        return None
    for perm in permutations(range(4)):
        fs = [F[i] for i in perm]
        if not all(has_gap(f, v) for v, f in enumerate(fs)):
            continue
        if (2, 3) in fs[0] and (1, 2) in fs[3]:
            inner = (0, 3) in fs[3] and (1, 4) in fs[0]
            return ConditionCCertificate(perm, inner)
    return None


def _certificate(F, cert):
    if cert is None:
        cert = satisfies_condition_c(F)
    if cert is None:
        raise ConditionCNotSatisfied(f"no ordering of the factors of {F.graph} satisfies Condition C")
    return cert


def condition_c_presentation(F: OneFactorisation):
    """Relabel ``F`` by a graph automorphism so that Condition C holds.

    Returns ``(F', certificate, mapping)``; the identity is tried first.
    Returns None if no automorphism works.  Pair types are unchanged since
    the factor indices are kept.
    """
    for mapping in automorphisms(F.graph):
        G = F.relabel(mapping)
        cert = satisfies_condition_c(G)
        if cert is not None:
            return G, cert, mapping
    return None


def extend_once(F: OneFactorisation, cert: ConditionCCertificate | None = None) -> OneFactorisation:
    cert = _certificate(F, cert)
    N = F.graph.order
    g = make_circulant(N + 4, (1, 3))
    new = [None] * 4
    for pos, idx in enumerate(cert.order):
        t = pos + 1
        shift = [v if v < t else v + 4 for v in range(N)]
        edges = [(shift[u], shift[v]) for u, v in F[idx].edges()]
        edges += [(t, t + 3), (t + 1, t + 2)]
        new[idx] = OneFactor.from_edges(N + 4, edges, idx)
    return validate_factorisation(g, new)


def extend_k(F: OneFactorisation, k: int, cert: ConditionCCertificate | None = None) -> OneFactorisation:
    if k < 0:
        raise ValueError("k must be non-negative")
    cert = _certificate(F, cert)
    for _ in range(k):
        F = extend_once(F, cert)
    return F


# special vertices of each pair, by positions in certificate order
SPECIAL_VERTICES = {
    (0, 1): (1,),
    (1, 2): (2,),
    (2, 3): (3,),
    (0, 2): (1, 2),
    (1, 3): (2, 3),
    (0, 3): (0,),
}


@dataclass(frozen=True)
class VertexCondition:
    pair: tuple[int, int]  # factor indices
    positions: tuple[int, int]  # positions in certificate order
    special: tuple[int, ...]
    cycle_lengths: tuple[int, ...]  # length of the cycle carrying each special vertex
    shared: bool  # all special vertices on one cycle

    def describe(self) -> str:
        if self.shared:
            who = " and ".join(map(str, self.special))
            return f"{who} on a {self.cycle_lengths[0]}-cycle"
        return ", ".join(f"{v} on a {n}-cycle" for v, n in zip(self.special, self.cycle_lengths))


def vertex_condition(F: OneFactorisation, pair, cert: ConditionCCertificate | None = None) -> VertexCondition:
    """Which cycles of the pair union carry that pair's special vertices.

    ``pair`` is a pair of factor indices (in either order).
    """
    cert = _certificate(F, cert)
    i, j = pair
    p, q = sorted((cert.position(i), cert.position(j)))
    special = SPECIAL_VERTICES[(p, q)]
    cycles = union_cycles(F[i], F[j])
    where = {v: c for c, cyc in enumerate(cycles) for v in cyc}
    ids = [where[v] for v in special]
    return VertexCondition(
        (min(i, j), max(i, j)),
        (p, q),
        special,
        tuple(len(cycles[c]) for c in ids),
        len(set(ids)) == 1,
    )


def predict_types(F: OneFactorisation, k: int, cert: ConditionCCertificate | None = None) -> dict:
    """Pair types after ``k`` extensions, derived from the base alone."""
    cert = _certificate(F, cert)
    out = {}
    for i, j in combinations(range(4), 2):
        vc = vertex_condition(F, (i, j), cert)
        lengths = list(len(c) for c in union_cycles(F[i], F[j]))
        if vc.shared:
            lengths.remove(vc.cycle_lengths[0])
            lengths.append(vc.cycle_lengths[0] + 4 * k)
        else:
            for n in vc.cycle_lengths:
                lengths.remove(n)
                lengths.append(n + 2 * k)
        out[(i, j)] = CycleType(lengths)
    return out


def base_factorisation(m: int, order: int) -> OneFactorisation:
    try:
        edges = BASES[(m, order)]
    except KeyError:
        raise UnsupportedBase(f"no base {m}-B1F of Circ({order},{{1,3}})") from None
    return validate_factorisation(make_circulant(order, (1, 3)), edges)


THRESHOLDS = {2: 5, 3: 6, 6: 9}
# explicit orders per m, then the base orders used for extension keyed by order % 4
EXPLICIT = {2: (10, 12), 3: (12, 14, 16), 6: (18,)}
EXTENDED = {2: {2: 14, 0: 16}, 3: {2: 18, 0: 20}, 6: {0: 20, 2: 22}}


def select_base(m: int, n: int) -> tuple[int, int]:
    """Base order and number of extensions used for ``construct_13(m, n)``."""
    if m not in THRESHOLDS:
        raise ParameterOutOfRange(f"m={m} for Circ({2 * n},{{1,3}})", "m must be 2, 3 or 6")
    N = 2 * n
    if n <= 3:
        raise ParameterOutOfRange(f"{m}-B1F of Circ({N},{{1,3}})", "degenerate: not a connected 4-regular graph")
    if n < THRESHOLDS[m]:
        raise ParameterOutOfRange(f"{m}-B1F of Circ({N},{{1,3}})", "proven nonexistent by exhaustive search")
    if N in EXPLICIT[m]:
        return N, 0
    base = EXTENDED[m][N % 4]
    return base, (N - base) // 4


def construct_13(m: int, n: int) -> OneFactorisation:
    base_order, k = select_base(m, n)
    return extend_k(base_factorisation(m, base_order), k) if k else base_factorisation(m, base_order)


def expected_types_13(m: int, n: int) -> dict:
    """Predicted pair types for ``construct_13(m, n)``."""
    base_order, k = select_base(m, n)
    base = base_factorisation(m, base_order)
    if k == 0:
        return pair_types(base)
    return predict_types(base, k)
