"""Circulant graphs, perfect matchings and the cycles formed by two matchings.

Vertices are the integers ``0 .. order-1`` with arithmetic modulo ``order``.
An edge is stored as a sorted 2-tuple ``(u, v)`` with ``u < v``.  A 1-factor
is stored as a *partner map*: ``partner[v]`` is the vertex matched to ``v``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from itertools import groupby
from typing import Iterable, Sequence

from .errors import (
    DistanceOutOfRange,
    DuplicateDistance,
    EdgeNotInGraph,
    FactorsShareEdge,
    IncompleteCover,
    InvalidOrder,
    NotPerfectMatching,
    OddOrder,
    OverlappingFactors,
    UnsupportedConnectionSetSize,
)

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical form of the edge ``{u, v}``."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def distance(u: int, v: int, order: int) -> int:
    """Circular distance between two vertices of ``Z_order``."""
    d = (v - u) % order
    return min(d, order - d)


@dataclass(frozen=True)
class CirculantGraph:
    order: int
    connections: tuple[int, ...]

    def __str__(self):
        return f"Circ({self.order},{{{','.join(map(str, self.connections))}}})"

    @property
    def regularity(self) -> int:
        half = self.order // 2
        return sum(1 if d == half else 2 for d in self.connections)

    def neighbours(self, v: int) -> list[int]:
        out = set()
        for d in self.connections:
            out.add((v + d) % self.order)
            out.add((v - d) % self.order)
        return sorted(out)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.order and 0 <= v < self.order):
            return False
        return distance(u, v, self.order) in self.connections

    def edges(self) -> list[Edge]:
        """All edges, ordered by smaller endpoint and then by distance."""
        out = set()
        for v in range(self.order):
            for d in self.connections:
                out.add(edge(v, (v + d) % self.order))
        return sorted(out, key=lambda e: (e[0], distance(e[0], e[1], self.order), e[1]))

    def edge_count(self) -> int:
        return self.order * self.regularity // 2


def make_circulant(order: int, connections: Iterable[int]) -> CirculantGraph:
    """Build ``Circ(order, connections)``, validating the connection set."""
    if order % 2:
        raise OddOrder(order)
    if order < 4:
        raise InvalidOrder(f"order must be at least 4, got {order}")
    ds = list(connections)
    if not ds:
        raise InvalidOrder("connection set is empty")
    seen = set()
    for d in ds:
        if not 1 <= d <= order // 2:
            raise DistanceOutOfRange(d, order)
        if d in seen:
            raise DuplicateDistance(d)
        seen.add(d)
    return CirculantGraph(order, tuple(sorted(ds)))


def is_connected(g: CirculantGraph) -> bool:
    return reduce(math.gcd, g.connections, g.order) == 1


# ---------------------------------------------------------------------------
# 1-factors


@dataclass(frozen=True)
class OneFactor:
    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        for v, u in enumerate(p):
            if not 0 <= u < len(p) or u == v or p[u] != v:
                raise NotPerfectMatching(None, v, "breaks the partner involution")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]], index=None) -> OneFactor:
        partner = [-1] * order
        for pair in edges:
            u, v = pair
            for w in (u, v):
                if not 0 <= w < order:
                    raise NotPerfectMatching(index, w, f"is not a vertex of Z_{order}")
            if u == v:
                raise NotPerfectMatching(index, u, "is matched to itself")
            for w in (u, v):
                if partner[w] != -1:
                    raise NotPerfectMatching(index, w, "is matched more than once")
            partner[u], partner[v] = v, u
        for v, u in enumerate(partner):
            if u == -1:
                raise NotPerfectMatching(index, v, "is unmatched")
        return cls(tuple(partner))

    @property
    def order(self) -> int:
        return len(self.partner)

    def edges(self) -> list[Edge]:
        return [(v, u) for v, u in enumerate(self.partner) if v < u]

    def __contains__(self, e) -> bool:
        u, v = e
        return 0 <= u < len(self.partner) and self.partner[u] == v

    def relabel(self, mapping: Sequence[int]) -> OneFactor:
        """Image of this factor under the vertex permutation ``mapping``."""
        partner = [0] * len(self.partner)
        for v, u in enumerate(self.partner):
            partner[mapping[v]] = mapping[u]
        return OneFactor(tuple(partner))


@dataclass(frozen=True)
class OneFactorisation:
    graph: CirculantGraph
    factors: tuple[OneFactor, ...]

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i) -> OneFactor:
        return self.factors[i]

    def factor_of(self) -> dict[Edge, int]:
        """Map each edge to the index of the factor containing it."""
        return {e: i for i, f in enumerate(self.factors) for e in f.edges()}

    def edge_lists(self) -> list[list[Edge]]:
        return [f.edges() for f in self.factors]

    def relabel(self, mapping: Sequence[int]) -> OneFactorisation:
        return OneFactorisation(self.graph, tuple(f.relabel(mapping) for f in self.factors))

    def reorder(self, order: Sequence[int]) -> OneFactorisation:
        return OneFactorisation(self.graph, tuple(self.factors[i] for i in order))

    def canonical(self) -> OneFactorisation:
        """Same factorisation with factors sorted by their edge lists."""
        return OneFactorisation(self.graph, tuple(sorted(self.factors, key=OneFactor.edges)))


def validate_factorisation(g: CirculantGraph, factors) -> OneFactorisation:
    """Check that ``factors`` partition the edge set of ``g`` into 1-factors.

    Each factor may be a :class:`OneFactor` or an iterable of vertex pairs.
    Checks run in a fixed order (edge membership, overlaps, matching
    property, coverage) so the first reported problem is deterministic.
    """
    edge_lists = []
    for i, f in enumerate(factors):
        if isinstance(f, OneFactor):
            if f.order != g.order:
                raise NotPerfectMatching(i, f.order, f"factor has {f.order} vertices, graph has {g.order}")
            edge_lists.append(f.edges())
        else:
            pairs = []
            for pair in f:
                u, v = (int(x) for x in pair)
                if not g.has_edge(u, v):
                    raise EdgeNotInGraph((u, v), i)
                pairs.append(edge(u, v))
            edge_lists.append(pairs)

    owner: dict[Edge, list[int]] = {}
    for i, pairs in enumerate(edge_lists):
        for e in pairs:
            if not g.has_edge(*e):
                raise EdgeNotInGraph(e, i)
            owner.setdefault(e, []).append(i)
    for e in sorted(owner):
        if len(owner[e]) > 1:
            raise OverlappingFactors(e, owner[e])

    built = []
    for i, (f, pairs) in enumerate(zip(factors, edge_lists)):
        built.append(f if isinstance(f, OneFactor) else OneFactor.from_edges(g.order, pairs, index=i))

    total = g.edge_count()
    if len(owner) != total:
        raise IncompleteCover(len(owner), total)
    return OneFactorisation(g, tuple(built))


# ---------------------------------------------------------------------------
# cycles of a pair of factors


def union_cycles(f1: OneFactor, f2: OneFactor) -> list[tuple[int, ...]]:
    """Cycles of ``f1 ∪ f2``.

    Each cycle starts at its smallest vertex and leaves along ``f1``; cycles
    are listed by increasing smallest vertex.
    """
    p1, p2 = f1.partner, f2.partner
    if len(p1) != len(p2):
        raise ValueError("factors live on different vertex sets")
    for v in range(len(p1)):
        if p1[v] == p2[v]:
            raise FactorsShareEdge(edge(v, p1[v]))
    seen = [False] * len(p1)
    cycles = []
    for start in range(len(p1)):
        if seen[start]:
            continue
        cyc = []
        v, use_first = start, True
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = p1[v] if use_first else p2[v]
            use_first = not use_first
        cycles.append(tuple(cyc))
    return cycles


class CycleType(tuple):
    """Multiset of cycle lengths, stored in descending order.

    Prints in exponent notation, e.g. ``[8,4^4]``.
    """

    def __new__(cls, lengths: Iterable[int] = ()):
        vals = sorted((int(x) for x in lengths), reverse=True)
        for c in vals:
            if c < 4 or c % 2:
                raise ValueError(f"cycle length {c} is not an even number >= 4")
        return super().__new__(cls, vals)

    def __str__(self):
        parts = []
        for c, grp in groupby(self):
            k = len(list(grp))
            parts.append(f"{c}^{k}" if k > 1 else str(c))
        return "[" + ",".join(parts) + "]"

    def __repr__(self):
        return f"CycleType({str(self)})"

    @property
    def order(self) -> int:
        return sum(self)

    @classmethod
    def parse(cls, text: str) -> CycleType:
        """Parse ``[8,4^4]`` style notation (brackets optional)."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        lengths = []
        for tok in filter(None, (t.strip() for t in body.split(","))):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad cycle type token {tok!r} in {text!r}")
            lengths += [int(m.group(1))] * int(m.group(2) or 1)
        return cls(lengths)


def power_type(*parts: tuple[int, int]) -> CycleType:
    """``power_type((8, 1), (4, 3))`` is ``[8,4^3]``; zero exponents allowed."""
    out = []
    for c, k in parts:
        if k < 0:
            raise ValueError(f"negative exponent {k} for cycle length {c}")
        out += [c] * k
    return CycleType(out)


def cycle_type(f1: OneFactor, f2: OneFactor) -> CycleType:
    return CycleType(len(c) for c in union_cycles(f1, f2))


# ---------------------------------------------------------------------------
# connection-set isomorphism


def units(order: int) -> list[int]:
    return [m for m in range(1, order) if math.gcd(m, order) == 1]


def connection_sets_isomorphic(order: int, d1: Iterable[int], d2: Iterable[int]) -> bool:
    """Whether ``Circ(order, d1)`` and ``Circ(order, d2)`` are isomorphic.

    Uses the multiplier criterion for two-element connection sets: some
    unit ``m`` of ``Z_order`` maps ``d2`` onto ``±d1``.
    """
    g1, g2 = make_circulant(order, d1), make_circulant(order, d2)
    if len(g1.connections) != 2 or len(g2.connections) != 2:
        raise UnsupportedConnectionSetSize(
            "the multiplier criterion is only applied to two-element connection sets"
        )
    target = set(g1.connections)
    for m in units(order):
        if {distance(0, m * d, order) for d in g2.connections} == target:
            return True
    return False


def canonical_connection_set(order: int, connections: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically smallest connection set in the multiplier orbit."""
    g = make_circulant(order, connections)
    images = {
        tuple(sorted({distance(0, m * d, order) for d in g.connections}))
        for m in units(order)
    }
    return min(images)


def automorphisms(g: CirculantGraph):
    """Yield every automorphism of ``g`` as a tuple ``mapping[v]``.

    Plain backtracking that extends a partial map vertex by vertex and
    checks adjacency against already mapped vertices.  The identity comes
    first and the order is deterministic.
    """
    n = g.order
    adj = [set(g.neighbours(v)) for v in range(n)]
    # visit vertices in BFS order so every new vertex has a mapped neighbour
    order, seen = [0], {0}
    for v in order:
        for u in sorted(adj[v]):
            if u not in seen:
                seen.add(u)
                order.append(u)
    image = [-1] * n
    used = [False] * n

    def extend(pos):
        if pos == n:
            yield tuple(image)
            return
        v = order[pos]
        mapped_nbrs = [image[u] for u in adj[v] if image[u] != -1]
        if mapped_nbrs:
            cands = set(adj[mapped_nbrs[0]])
            for w in mapped_nbrs[1:]:
                cands &= adj[w]
        else:
            cands = range(n)
        for c in sorted(cands):
            if used[c]:
                continue
            ok = all(
                (image[u] in adj[c]) == (u in adj[v])
                for u in order[:pos]
            )
            if not ok:
                continue
            image[v], used[c] = c, True
            yield from extend(pos + 1)
            image[v], used[c] = -1, False

    yield from extend(0)
