"""Exhaustive search for 1-factorisations of small circulants.

A 1-factorisation of an r-regular graph is a proper r-edge-colouring; the
search colours edges in a fixed order (smaller endpoint, then distance) and
keeps, for every vertex, a bitmask of colours still missing there.  After
each decision it propagates:

* an uncoloured edge with no common free colour is a conflict;
* an edge with exactly one common free colour gets it;
* a free colour of a vertex that fits on no incident edge is a conflict,
  and one that fits on exactly one incident edge is placed there.

The tree is cut at a fixed depth into work units.  Units are explored
independently (in-process or in worker processes) and merged in unit order,
so results, node counts and budget cut-offs do not depend on the number of
workers.  Node counts are exact: the splitting phase is counted first, then
each unit in order, as if one worker had done everything.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .balance import feasible, is_m_balanced
from .errors import Disconnected, NotRegular34
from .graph import (
    CirculantGraph,
    OneFactor,
    OneFactorisation,
    canonical_connection_set,
    is_connected,
    make_circulant,
)

SPLIT_DEPTH = 3
TABLE_MS = (1, 2, 3, 6)


@dataclass(frozen=True)
class SearchOptions:
    symmetry_break: bool = True
    limit: int | None = None
    node_budget: int | None = None
    workers: int = 1

    def __post_init__(self):
        for name in ("limit", "node_budget"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")


class Outcome(Enum):
    FOUND = "found"
    NOT_FOUND = "none"
    UNKNOWN = "unknown"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class ExistenceOutcome:
    kind: Outcome
    nodes: int = 0
    witness: OneFactorisation | None = field(default=None, compare=False)

    @property
    def found(self) -> bool:
        return self.kind is Outcome.FOUND

    def __str__(self):
        return self.kind.value


# ---------------------------------------------------------------------------
# the colouring engine


class _Budget(Exception):
    pass


class _Solver:
    def __init__(self, order: int, connections: tuple[int, ...], symmetry_break: bool):
        g = make_circulant(order, connections)
        self.graph = g
        self.r = g.regularity
        self.edges = g.edges()
        n = order
        self.ends = self.edges
        self.inc = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u].append(i)
            self.inc[v].append(i)
        self.nbr = [sorted({w for e in self.inc[v] for w in self.edges[e]} - {v}) for v in range(n)]
        self.full = (1 << self.r) - 1
        self.colour = [-1] * len(self.edges)
        self.avail = [self.full] * n
        self.trail: list[int] = []
        self.unassigned = len(self.edges)
        self.nodes = 0
        self.cap: int | None = None
        self.ok = True
        if symmetry_break:
            at0 = sorted(self.inc[0], key=lambda e: self._other(e, 0))
            for c, e in enumerate(at0):
                if self.colour[e] == -1 and not self._assign(e, c):
                    self.ok = False
                    break
                if self.colour[e] != c:
                    self.ok = False
                    break

    def _other(self, e, v):
        a, b = self.ends[e]
        return b if a == v else a

    def _set(self, e, c, queue):
        u, v = self.ends[e]
        bit = 1 << c
        self.colour[e] = c
        self.avail[u] &= ~bit
        self.avail[v] &= ~bit
        self.trail.append(e)
        self.unassigned -= 1
        queue.append(u)
        queue.append(v)

    def _assign(self, e, c) -> bool:
        u, v = self.ends[e]
        if not (self.avail[u] & self.avail[v]) >> c & 1:
            return False
        queue: list[int] = []
        self._set(e, c, queue)
        return self._propagate(queue)

    def _propagate(self, queue) -> bool:
        colour, avail, ends, inc = self.colour, self.avail, self.ends, self.inc
        while queue:
            x = queue.pop()
            for w in [x] + self.nbr[x]:
                free = avail[w]
                if not free:
                    continue
                open_edges = [e for e in inc[w] if colour[e] == -1]
                opts = []
                for e in open_edges:
                    a, b = ends[e]
                    o = avail[a] & avail[b]
                    if not o:
                        return False
                    if o & (o - 1) == 0:
                        if colour[e] == -1:
                            self._set(e, o.bit_length() - 1, queue)
                        continue
                    opts.append((e, o))
                # every free colour at w must still fit on some open edge
                free = avail[w]
                c = 0
                while free:
                    if free & 1:
                        bit = 1 << c
                        fits = [e for e, o in opts if o & bit and colour[e] == -1]
                        if not fits:
                            if not any(colour[e] == c for e in inc[w]):
                                return False
                        elif len(fits) == 1:
                            e = fits[0]
                            a, b = ends[e]
                            if not (avail[a] & avail[b]) & bit:
                                return False
                            self._set(e, c, queue)
                            break
                    free >>= 1
                    c += 1
        return True

    def _undo(self, mark):
        while len(self.trail) > mark:
            e = self.trail.pop()
            c = self.colour[e]
            u, v = self.ends[e]
            self.avail[u] |= 1 << c
            self.avail[v] |= 1 << c
            self.colour[e] = -1
            self.unassigned += 1

    def _next_edge(self):
        for e, c in enumerate(self.colour):
            if c == -1:
                return e
        return None

    def _tick(self):
        if self.cap is not None and self.nodes >= self.cap:
            raise _Budget
        self.nodes += 1

    def solutions(self, depth_limit=None, prefix=()):
        """Yield complete colourings (tuples) below the current state.

        With ``depth_limit`` the search stops at that many decisions and
        yields the decision prefixes instead.
        """
        if not self.ok:
            return
        if self.unassigned == 0:
            yield prefix if depth_limit is not None else tuple(self.colour)
            return
        if depth_limit is not None and len(prefix) == depth_limit:
            yield prefix
            return
        e = self._next_edge()
        u, v = self.ends[e]
        opts = self.avail[u] & self.avail[v]
        for c in range(self.r):
            if not opts >> c & 1:
                continue
            self._tick()
            mark = len(self.trail)
            if self._assign(e, c):
                yield from self.solutions(depth_limit, prefix + ((e, c),))
            self._undo(mark)

    def replay(self, prefix) -> None:
        for e, c in prefix:
            if not self._assign(e, c):
                raise AssertionError("work-unit prefix no longer applies")

    def to_factorisation(self, colouring) -> OneFactorisation:
        buckets = [[] for _ in range(self.r)]
        for e, c in zip(self.edges, colouring):
            buckets[c].append(e)
        order = self.graph.order
        return OneFactorisation(
            self.graph, tuple(OneFactor.from_edges(order, b, i) for i, b in enumerate(buckets))
        )


def _check_graph(g: CirculantGraph) -> None:
    if g.regularity not in (3, 4):
        raise NotRegular34(f"{g} is {g.regularity}-regular; only 3 and 4 are supported")
    if not is_connected(g):
        raise Disconnected(f"{g} is not connected")


# ---------------------------------------------------------------------------
# work units


@dataclass
class _UnitResult:
    hits: list  # (nodes at discovery, colouring, matched targets)
    nodes: int
    capped: bool


def _explore(order, connections, symmetry_break, prefix, cap, targets, limit):
    """Explore one work unit, yielding ``(node_count, colouring, matched)``.

    Returns the final node count and whether the cap was hit through
    ``StopIteration.value``.
    """
    s = _Solver(order, connections, symmetry_break)
    s.replay(prefix)
    s.cap = cap
    pending = set(targets) if targets is not None else None
    emitted = 0
    try:
        for col in s.solutions():
            if pending is None:
                yield s.nodes, col, ()
                emitted += 1
                if limit is not None and emitted >= limit:
                    break
                continue
            F = s.to_factorisation(col)
            matched = tuple(m for m in sorted(pending) if is_m_balanced(F, m))
            if matched:
                pending.difference_update(matched)
                yield s.nodes, col, matched
                if not pending:
                    break
    except _Budget:
        return s.nodes, True
    return s.nodes, False


def _run_unit(args) -> _UnitResult:
    gen = _explore(*args)
    hits = []
    while True:
        try:
            hits.append(next(gen))
        except StopIteration as stop:
            nodes, capped = stop.value
            return _UnitResult(hits, nodes, capped)


@dataclass
class SearchRun:
    """Lazy result stream of one search, with its final status.

    ``complete`` is True once the whole space was explored; ``budget_hit``
    is True if the node budget stopped the search.  Both are only
    meaningful after iteration finished.
    """

    graph: CirculantGraph
    options: SearchOptions
    targets: tuple[int, ...] | None = None
    nodes: int = 0
    complete: bool = False
    budget_hit: bool = False
    _consumed: bool = False

    def __iter__(self) -> Iterator:
        if self._consumed:
            raise RuntimeError("a SearchRun can only be iterated once")
        self._consumed = True
        return self._iterate()

    def _iterate(self):
        opts, g = self.options, self.graph
        budget = opts.node_budget
        root = _Solver(g.order, g.connections, opts.symmetry_break)
        root.cap = budget
        prefixes = []
        try:
            for p in root.solutions(depth_limit=SPLIT_DEPTH):
                prefixes.append(p)
        except _Budget:
            self.nodes = root.nodes
            self.budget_hit = True
            return
        self.nodes = root.nodes
        remaining = None if budget is None else budget - root.nodes
        emitted = 0
        limit = opts.limit if self.targets is None else None
        pending = set(self.targets or ())
        base_args = (g.order, g.connections, opts.symmetry_break)
        targets = tuple(sorted(pending)) if self.targets is not None else None

        if opts.workers == 1:
            # in-process units see the exact remaining budget and current targets
            stream = (
                _LazyUnit(base_args + (p, remaining, targets if targets is None else tuple(sorted(pending)), limit))
                for p in prefixes
            )
            pool = None
        else:
            pool = ProcessPoolExecutor(max_workers=opts.workers)
            stream = pool.map(_run_unit, [base_args + (p, budget, targets, limit) for p in prefixes])
        try:
            for result in stream:
                for at, col, matched in result.hits:
                    if remaining is not None and at > remaining:
                        break
                    if self.targets is None:
                        yield root.to_factorisation(col)
                        emitted += 1
                        if limit is not None and emitted >= limit:
                            self.nodes += at
                            return
                        continue
                    new = tuple(m for m in matched if m in pending)
                    if new:
                        pending.difference_update(new)
                        yield new, root.to_factorisation(col), self.nodes + at
                        if not pending:
                            self.nodes += at
                            return
                if result.capped or (remaining is not None and result.nodes > remaining):
                    self.nodes += remaining
                    self.budget_hit = True
                    return
                self.nodes += result.nodes
                if remaining is not None:
                    remaining -= result.nodes
            self.complete = True
        finally:
            if pool is not None:
                pool.shutdown(wait=True, cancel_futures=True)


class _LazyUnit:
    """In-process unit whose hits are produced on demand."""

    def __init__(self, args):
        self._gen = _explore(*args)
        self.nodes = 0
        self.capped = False

    @property
    def hits(self):
        while True:
            try:
                yield next(self._gen)
            except StopIteration as stop:
                self.nodes, self.capped = stop.value
                return


# ---------------------------------------------------------------------------
# public entry points


def enumerate_factorisations(g: CirculantGraph, opts: SearchOptions | None = None) -> SearchRun:
    """All 1-factorisations of ``g`` (up to factor order with symmetry breaking).

    Returns a :class:`SearchRun`; iterate it to receive factorisations in
    a deterministic order, then read ``complete`` / ``budget_hit``.
    """
    _check_graph(g)
    return SearchRun(g, opts or SearchOptions())


def find_balanced(g: CirculantGraph, ms, opts: SearchOptions | None = None) -> dict[int, ExistenceOutcome]:
    """Search once for an m-B1F of ``g`` for every m in ``ms``."""
    _check_graph(g)
    opts = opts or SearchOptions()
    ms = tuple(sorted(set(ms)))
    out: dict[int, ExistenceOutcome] = {}
    searchable = tuple(m for m in ms if feasible(m, g.regularity))
    for m in ms:
        if m not in searchable:
            out[m] = ExistenceOutcome(Outcome.INFEASIBLE)
    if not searchable:
        return out
    run = SearchRun(g, opts, targets=searchable)
    for matched, F, at in run:
        for m in matched:
            out[m] = ExistenceOutcome(Outcome.FOUND, at, F)
    missing = Outcome.NOT_FOUND if run.complete else Outcome.UNKNOWN
    for m in searchable:
        out.setdefault(m, ExistenceOutcome(missing, run.nodes))
    return dict(sorted(out.items()))


def exists_mb1f(g: CirculantGraph, m: int, opts: SearchOptions | None = None) -> ExistenceOutcome:
    """Found (with the first witness), NotFound after exhaustion, or Unknown."""
    return find_balanced(g, (m,), opts)[m]


@dataclass(frozen=True)
class TableRow:
    order: int
    connections: tuple[int, int]
    cells: dict  # m -> ExistenceOutcome

    @property
    def graph(self) -> CirculantGraph:
        return make_circulant(self.order, self.connections)


def table_graphs(max_order: int) -> list[CirculantGraph]:
    """One connected 2-distance circulant per isomorphism class, canonical set."""
    if max_order < 4 or max_order % 2:
        raise ValueError(f"max_order must be even and at least 4, got {max_order}")
    out = []
    for order in range(4, max_order + 1, 2):
        seen = set()
        for a in range(1, order // 2 + 1):
            for b in range(a + 1, order // 2 + 1):
                g = make_circulant(order, (a, b))
                if not is_connected(g):
                    continue
                canon = canonical_connection_set(order, (a, b))
                if canon not in seen:
                    seen.add(canon)
        out.extend(make_circulant(order, d) for d in sorted(seen))
    return out


def existence_table(max_order: int, opts: SearchOptions | None = None, ms=TABLE_MS) -> list[TableRow]:
    """Existence of m-B1Fs for every row of :func:`table_graphs`.

    Each row is searched once for all m together; ``node_budget`` applies
    per row.
    """
    opts = opts or SearchOptions()
    return [
        TableRow(g.order, g.connections, find_balanced(g, ms, opts))
        for g in table_graphs(max_order)
    ]
