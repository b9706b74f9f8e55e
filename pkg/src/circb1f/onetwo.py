"""Circ(2n, {1,2}): explicit 2-B1Fs and checks of the configuration lemmas.

Factors are referred to by index.  In the structural checks the factor
holding the 1-edges of every 2-configuration plays the "yellow" role.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import ParameterOutOfRange, WrongConnectionSet
from .graph import (
    OneFactorisation,
    distance,
    edge,
    make_circulant,
    union_cycles,
    validate_factorisation,
)


class EdgeSpanClass(Enum):
    ONE_EDGE = 1
    TWO_EDGE = 2


def span_class(u: int, v: int, order: int) -> EdgeSpanClass:
    return EdgeSpanClass(distance(u, v, order))


def _require_onetwo(F: OneFactorisation) -> int:
    if F.graph.connections != (1, 2) or F.graph.order < 6:
        raise WrongConnectionSet("(1, 2) on at least 6 vertices", F.graph.connections)
    return F.graph.order


def construct_12_order8() -> OneFactorisation:
    g = make_circulant(8, (1, 2))
    R = [(0, 1), (2, 3), (4, 5), (6, 7)]
    G = [(0, 2), (1, 3), (4, 6), (5, 7)]
    B = [(0, 6), (1, 7), (2, 4), (3, 5)]
    Y = [(0, 7), (1, 2), (3, 4), (5, 6)]
    return validate_factorisation(g, [R, G, B, Y])


def construct_12_rotation(n: int) -> OneFactorisation:
    """2-B1F of ``Circ(2n, {1,2})`` for ``n % 3 == 0`` and ``n > 3``.

    Factor 1 and 2 are the images of factor 0 under ``v -> v+2`` and
    ``v -> v+4``; factor 3 holds the 1-edges ``{x, x+1}`` with x even.
    """
    if n % 3 or n <= 3:
        reason = "n must be a multiple of 3 greater than 3"
        if n >= 5 and n % 3:
            reason = "proven nonexistent for n = 1, 2 (mod 3)"
        raise ParameterOutOfRange(f"rotation 2-B1F of Circ({2 * n},{{1,2}})", reason)
    N = 2 * n

    def factor(one_res, two_res):
        out = [(x, (x + 1) % N) for x in range(N) if x % 6 == one_res]
        out += [(x, (x + 2) % N) for x in range(N) if x % 6 in two_res]
        return out

    R = factor(1, (3, 4))
    G = factor(3, (0, 5))
    B = factor(5, (1, 2))
    Y = [(x, x + 1) for x in range(0, N, 2)]
    return validate_factorisation(make_circulant(N, (1, 2)), [R, G, B, Y])


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class Configuration:
    anchor: tuple[int, int]
    members: tuple[tuple[int, int], ...]  # {v-1,v+1}, {v,v+1}, {v,v+2}
    factors: tuple[int, ...]  # factor index of each member

    @property
    def k(self) -> int:
        return len(set(self.factors))

    @property
    def one_edge_factor(self) -> int:
        return self.factors[1]


def configuration_class(F: OneFactorisation, v: int) -> Configuration:
    """Configuration of the 1-edge ``{v, v+1}`` together with its colours."""
    N = _require_onetwo(F)
    v %= N
    members = (
        edge((v - 1) % N, (v + 1) % N),
        edge(v, (v + 1) % N),
        edge(v, (v + 2) % N),
    )
    owner = F.factor_of()
    return Configuration(edge(v, (v + 1) % N), members, tuple(owner[e] for e in members))


def configurations(F: OneFactorisation) -> list[Configuration]:
    return [configuration_class(F, v) for v in range(F.graph.order)]


@dataclass
class StructureReport:
    checks: dict[str, bool] = field(default_factory=dict)
    yellow: int | None = None

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def verify_structure_lemmas(F: OneFactorisation) -> StructureReport:
    """Evaluate every configuration observation/lemma directly on ``F``."""
    N = _require_onetwo(F)
    owner = F.factor_of()
    confs = configurations(F)
    rep = StructureReport()
    c = rep.checks

    c["k_in_2_3"] = all(cf.k in (2, 3) for cf in confs)
    c["two_config_two_edges_same_factor"] = all(
        cf.factors[0] == cf.factors[2] for cf in confs if cf.k == 2
    )
    c["three_config_neighbours"] = True
    c["two_config_neighbours"] = True
    for v, cf in enumerate(confs):
        prev, nxt = confs[(v - 1) % N], confs[(v + 1) % N]
        if cf.k == 3:
            ok = prev.k == 2 and nxt.k == 2 and prev.one_edge_factor == nxt.one_edge_factor
            c["three_config_neighbours"] &= ok
        elif cf.k == 2:
            c["two_config_neighbours"] &= prev.k == 3 and nxt.k == 3
    c["alternating"] = all(confs[v].k != confs[(v + 1) % N].k for v in range(N))

    def out_two_edges(v):
        return owner[edge(v, (v + 2) % N)], owner[edge((v + 1) % N, (v + 3) % N)]

    c["out_two_edges"] = all(
        (a != b) if cf.k == 2 else (a == b)
        for v, cf in enumerate(confs)
        for a, b in [out_two_edges(v)]
        if cf.k in (2, 3)
    )

    r = len(F)
    two_counts = [0] * r
    one_counts = [0] * r
    for e, i in owner.items():
        if distance(*e, N) == 2:
            two_counts[i] += 1
        else:
            one_counts[i] += 1
    c["even_two_edges_per_factor"] = all(t % 2 == 0 for t in two_counts)
    c["one_edge_factor_exists"] = 0 in two_counts

    yellow_candidates = {cf.one_edge_factor for cf in confs if cf.k == 2}
    c["two_config_one_edges_share_factor"] = len(yellow_candidates) == 1
    if len(yellow_candidates) == 1:
        (rep.yellow,) = yellow_candidates
    elif 0 in two_counts:
        rep.yellow = two_counts.index(0)
    if rep.yellow is None:
        c["yellow_unions_hamiltonian"] = False
        c["non_yellow_cycles_zero_or_two_one_edges"] = False
        c["cycle_count_from_one_edges"] = False
        return rep
    y = rep.yellow
    c["yellow_is_all_one_edges"] = two_counts[y] == 0

    others = [i for i in range(r) if i != y]
    c["yellow_unions_hamiltonian"] = all(
        len(union_cycles(F[y], F[x])) == 1 for x in others
    )
    zero_or_two = True
    count_rule = True
    for a, b in combinations(others, 2):
        cycles = union_cycles(F[a], F[b])
        per_cycle = [
            sum(distance(cyc[i], cyc[(i + 1) % len(cyc)], N) == 1 for i in range(len(cyc)))
            for cyc in cycles
        ]
        zero_or_two &= all(k in (0, 2) for k in per_cycle)
        ones = one_counts[a] + one_counts[b]
        expected = ones // 2 if ones else 2
        count_rule &= len(cycles) == expected
    c["non_yellow_cycles_zero_or_two_one_edges"] = zero_or_two
    c["cycle_count_from_one_edges"] = count_rule
    return rep
