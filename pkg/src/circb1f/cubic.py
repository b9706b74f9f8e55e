"""3-B1F constructions for the two connected cubic circulants of order 2n.

``construct_one_n`` handles ``Circ(2n, {1, n})`` and ``construct_two_n``
handles ``Circ(2n, {2, n})``.  Factor edge sets are written exactly as the
defining set-builder expressions, with every index reduced modulo 2n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DisconnectedParameter, ParameterOutOfRange
from .graph import CycleType, OneFactorisation, make_circulant, power_type, validate_factorisation

NONEXISTENT_N7 = "proven nonexistent by exhaustive search"
TOO_SMALL = "fewer than three possible pair types"


class CubicKind(Enum):
    ONE_N = "one-n"
    TWO_N = "two-n"


@dataclass(frozen=True)
class CubicFamily:
    kind: CubicKind
    n: int

    def __post_init__(self):
        check_cubic_range(self.kind, self.n)


def check_cubic_range(kind: CubicKind, n: int) -> None:
    label = f"Circ({2 * n},{{{1 if kind is CubicKind.ONE_N else 2},{n}}})"
    if kind is CubicKind.TWO_N and n % 2 == 0:
        raise DisconnectedParameter(f"{label} with even n={n}")
    if n == 7:
        raise ParameterOutOfRange(f"no 3-B1F of {label}", NONEXISTENT_N7)
    if n <= 5:
        raise ParameterOutOfRange(f"no 3-B1F of {label}", TOO_SMALL)
    if kind is CubicKind.ONE_N and n % 2 == 1 and n < 9:
        raise ParameterOutOfRange(f"no 3-B1F of {label}", "odd n must be at least 9")
    if kind is CubicKind.TWO_N and n < 9:
        raise ParameterOutOfRange(f"no 3-B1F of {label}", "n must be at least 9")


def _build(order, connections, factor_edges):
    g = make_circulant(order, connections)
    factors = [[(u % order, v % order) for u, v in edges] for edges in factor_edges]
    return validate_factorisation(g, factors)


def construct_one_n(n: int) -> OneFactorisation:
    """3-B1F of ``Circ(2n, {1, n})`` for n = 6, n = 8 or n >= 9 (n != 7)."""
    check_cubic_range(CubicKind.ONE_N, n)
    N = 2 * n
    if n % 2 == 0:
        f1 = [(x, x + 1) for x in range(0, N - 1, 2)]
        f2 = [(x, x + 1) for x in range(1, N - 2, 2) if x != n - 1]
        f2 += [(x, x + n) for x in (0, n - 1)]
        f3 = [(x, x + 1) for x in (n - 1, N - 1)]
        f3 += [(x, x + n) for x in range(1, n - 1)]
        return _build(N, (1, n), [f1, f2, f3])

    fa = [(x, x + 1) for x in range(0, n - 2) if x % 2 == 0]
    fa += [(x, x + 1) for x in range(n, N - 2) if x % 2 == 1]
    fa += [(n - 1, N - 1)]
    fb = [(x, x + 1) for x in range(1, n - 1) if x % 2 == 1 and x != n - 4]
    fb += [(x, x + 1) for x in range(n + 1, N - 1) if x % 2 == 0 and x != N - 4]
    fb += [(x, x + n) for x in (0, n - 4, n - 3)]
    fc = [(x, x + 1) for x in (n - 4, n - 1, N - 4, N - 1)]
    fc += [(x, x + n) for x in range(1, n - 1) if x not in (n - 4, n - 3)]
    return _build(N, (1, n), [fa, fb, fc])


def construct_two_n(n: int) -> OneFactorisation:
    """3-B1F of ``Circ(2n, {2, n})`` for odd n >= 9."""
    check_cubic_range(CubicKind.TWO_N, n)
    N = 2 * n
    if n % 4 == 1:
        f1 = [(x, x + 2) for x in range(0, n - 3) if x % 4 in (0, 1)]
        f1 += [(x, x + 2) for x in range(n, N - 3) if x % 4 in (1, 2)]
        f1 += [(n - 1, N - 1)]
        f2 = [(x, x + 2) for x in (n - 7, n - 3, N - 7, N - 3)]
        f2 += [(x, x + n) for x in range(0, n - 7)]
        f2 += [(x, x + n) for x in (n - 6, n - 4, n - 2)]
        f3 = [(x, x + 2) for x in range(0, n - 9) if x % 4 in (2, 3)]
        f3 += [(x, x + 2) for x in range(n, N - 9) if x % 4 in (0, 3)]
        f3 += [(x, x + 2) for x in (n - 6, n - 2, n - 1, N - 6, N - 2, N - 1)]
        f3 += [(x, x + n) for x in (n - 7, n - 5, n - 3)]
        return _build(N, (2, n), [f1, f2, f3])

    fa = [(x, x + 2) for x in range(0, n - 5) if x % 4 in (0, 1)]
    fa += [(x, x + 2) for x in range(n, N - 5) if x % 4 in (0, 3)]
    fa += [(x, x + 2) for x in (n - 3, N - 3)]
    fa += [(n - 2, N - 2)]
    fb = [(x, x + 2) for x in (n - 8, n - 4, N - 8, N - 4)]
    fb += [(x, x + n) for x in range(0, n - 8)]
    fb += [(x, x + n) for x in (n - 7, n - 5, n - 3, n - 1)]
    fc = [(x, x + 2) for x in range(0, n - 11) if x % 4 in (2, 3)]
    fc += [(x, x + 2) for x in range(n, N - 11) if x % 4 in (1, 2)]
    fc += [(x, x + 2) for x in (n - 9, n - 5, n - 2, n - 1, N - 9, N - 5, N - 2, N - 1)]
    fc += [(x, x + n) for x in (n - 8, n - 6, n - 4)]
    return _build(N, (2, n), [fa, fb, fc])


def expected_types_cubic(family: CubicFamily) -> set[CycleType]:
    """Closed-form pair types of the constructed 3-B1F."""
    n, N = family.n, 2 * family.n
    if family.kind is CubicKind.ONE_N:
        if n % 2 == 0:
            return {
                power_type((N, 1)),
                power_type((4, N // 4)),
                power_type((8, 1), (4, (N - 8) // 4)),
            }
        return {
            power_type((N - 6, 1), (6, 1)),
            power_type((6, 1), (4, (N - 6) // 4)),
            power_type((8, 1), (6, 1), (4, (N - 14) // 4)),
        }
    return {
        power_type((10, 1), (4, (N - 10) // 4)),
        power_type((N - 4, 1), (4, 1)),
        power_type((6, 1), (4, (N - 6) // 4)),
    }


def construct_cubic(family: CubicFamily) -> OneFactorisation:
    if family.kind is CubicKind.ONE_N:
        return construct_one_n(family.n)
    return construct_two_n(family.n)
