"""Independent reference implementations used only by the tests.

None of these share code with the package beyond building the edge list.
"""

from itertools import product

import networkx as nx


def circulant_edges(order, connections):
    out = set()
    for v in range(order):
        for d in connections:
            u = (v + d) % order
            out.add((min(u, v), max(u, v)))
    return sorted(out)


def nx_circulant(order, connections):
    g = nx.Graph()
    g.add_nodes_from(range(order))
    g.add_edges_from(circulant_edges(order, connections))
    return g


def perfect_matchings(order, edges):
    """All perfect matchings, as frozensets of edges."""
    adj = {v: [] for v in range(order)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    out = []

    def rec(free, chosen):
        if not free:
            out.append(frozenset(chosen))
            return
        v = min(free)
        for u in adj[v]:
            if u in free:
                e = (min(u, v), max(u, v))
                rec(free - {u, v}, chosen + [e])

    rec(frozenset(range(order)), [])
    return out


def naive_factorisations(order, connections):
    """Every 1-factorisation as a frozenset of matchings (factor order ignored)."""
    edges = circulant_edges(order, connections)
    degree = len(edges) * 2 // order
    pms = perfect_matchings(order, edges)
    # the factor through edge e0 is chosen first, then the factor through the
    # smallest uncovered edge, and so on; disjoint tuples covering E
    out = set()

    def rec(used, chosen):
        if len(chosen) == degree:
            if len(used) == len(edges):
                out.add(frozenset(chosen))
            return
        first = min(e for e in edges if e not in used)
        for m in pms:
            if first in m and not (m & used):
                rec(used | m, chosen + [m])

    rec(frozenset(), [])
    return out


def as_matching_set(F):
    return frozenset(frozenset(f.edges()) for f in F)


def proper_colourings(order, connections, colours):
    """Brute force over every assignment of colours to edges."""
    edges = circulant_edges(order, connections)
    count = 0
    for assign in product(range(colours), repeat=len(edges)):
        seen = set()
        ok = True
        for (u, v), c in zip(edges, assign):
            if (u, c) in seen or (v, c) in seen:
                ok = False
                break
            seen.add((u, c))
            seen.add((v, c))
        count += ok
    return count


def union_cycle_lengths(f1_edges, f2_edges):
    g = nx.MultiGraph()
    g.add_edges_from(f1_edges)
    g.add_edges_from(f2_edges)
    return sorted((len(c) for c in nx.connected_components(g)), reverse=True)


def isomorphic(order, d1, d2):
    return nx.is_isomorphic(nx_circulant(order, d1), nx_circulant(order, d2))


def connected_two_sets(order):
    from math import gcd

    half = order // 2
    return [
        (a, b)
        for a in range(1, half + 1)
        for b in range(a + 1, half + 1)
        if gcd(gcd(order, a), b) == 1
    ]
