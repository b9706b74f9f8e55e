"""Pair-type profiles and the m-balanced verdict for a 1-factorisation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import CycleType, OneFactorisation, cycle_type


def pair_types(F: OneFactorisation) -> dict[tuple[int, int], CycleType]:
    return {
        (i, j): cycle_type(F[i], F[j])
        for i, j in combinations(range(len(F)), 2)
    }


def pair_profile(F: OneFactorisation) -> Counter:
    """How many factor pairs have each cycle type."""
    return Counter(pair_types(F).values())


@dataclass(frozen=True)
class BalanceReport:
    pair_types: dict[tuple[int, int], CycleType]
    profile: dict[CycleType, int]
    m: int | None  # None means unbalanced

    @property
    def balanced(self) -> bool:
        return self.m is not None

    @property
    def is_uniform(self) -> bool:
        return self.m == 1

    @property
    def is_perfect(self) -> bool:
        if not self.is_uniform:
            return False
        (t,) = self.profile
        return len(t) == 1

    @property
    def types(self) -> set[CycleType]:
        return set(self.profile)

    @property
    def verdict(self) -> str:
        return f"{self.m}-B1F" if self.balanced else "unbalanced"

    def sorted_profile(self) -> list[tuple[CycleType, int]]:
        return sorted(self.profile.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def summary(self) -> str:
        parts = ", ".join(f"{t}x{n}" for t, n in self.sorted_profile())
        flags = []
        if self.is_perfect:
            flags.append("perfect")
        elif self.is_uniform:
            flags.append("uniform")
        tail = f" ({', '.join(flags)})" if flags else ""
        return f"{self.verdict}{tail}: {parts}"


def classify_balance(F: OneFactorisation) -> BalanceReport:
    types = pair_types(F)
    profile = dict(Counter(types.values()))
    counts = set(profile.values())
    m = len(profile) if len(counts) == 1 else None
    if m is not None:
        assert comb(len(F), 2) % m == 0
    return BalanceReport(types, profile, m)


def is_m_balanced(F: OneFactorisation, m: int) -> bool:
    """Early-exit test for a specific m; agrees with ``classify_balance``."""
    r = len(F)
    pairs = comb(r, 2)
    if m <= 0 or pairs % m:
        return False
    quota = pairs // m
    seen: Counter = Counter()
    for i, j in combinations(range(r), 2):
        t = cycle_type(F[i], F[j])
        seen[t] += 1
        if seen[t] > quota or len(seen) > m:
            return False
    return len(seen) == m


def feasible(m: int, r: int) -> bool:
    """An m-B1F of an r-regular graph needs ``m`` to divide ``C(r, 2)``."""
    return m > 0 and comb(r, 2) % m == 0
