"""Rotation 2-B1Fs of Circ(3*ell*a, {1, ell}) and Circ(3*ell*a, {1, 2*ell}).

The first factor is built on residues modulo 3*ell; the next two are its
images under ``v -> v + ell`` and the last factor holds the 1-edges
``{x, x+1}`` with x odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParams
from .graph import CycleType, OneFactorisation, make_circulant, power_type, validate_factorisation


class Variant(Enum):
    SPAN = "span"
    DOUBLE_SPAN = "double-span"


@dataclass(frozen=True)
class RotationParams:
    ell: int
    a: int
    variant: Variant = Variant.SPAN

    def __post_init__(self):
        if not isinstance(self.variant, Variant):
            object.__setattr__(self, "variant", Variant(self.variant))
        ell, a = self.ell, self.a
        if ell < 2 or ell % 2:
            raise InvalidParams(f"ell={ell}", "ell must be a positive even integer")
        if a < 1:
            raise InvalidParams(f"a={a}", "a must be positive")
        n = self.order // 2
        if n <= 3:
            raise InvalidParams(f"ell={ell}, a={a}", "order/2 must exceed 3")
        if self.chord >= n:
            raise InvalidParams(
                f"ell={ell}, a={a}, {self.variant.value}",
                f"chord length {self.chord} must be below order/2={n} (a too small)",
            )

    @property
    def order(self) -> int:
        return 3 * self.ell * self.a

    @property
    def chord(self) -> int:
        return self.ell if self.variant is Variant.SPAN else 2 * self.ell

    @property
    def connections(self) -> tuple[int, int]:
        return (1, self.chord)


def construct_general(p: RotationParams) -> OneFactorisation:
    N, ell = p.order, p.ell
    block = 3 * ell
    if p.variant is Variant.SPAN:
        chord_res = range(0, ell)
        one_res = range(2 * ell, 3 * ell, 2)
    else:
        chord_res = range(0, ell)
        one_res = range(ell, 2 * ell, 2)
    f1 = [(x, (x + p.chord) % N) for x in range(N) if x % block in chord_res]
    f1 += [(x, (x + 1) % N) for x in range(N) if x % block in one_res]
    f2 = [((u + ell) % N, (v + ell) % N) for u, v in f1]
    f3 = [((u + ell) % N, (v + ell) % N) for u, v in f2]
    f4 = [(x, (x + 1) % N) for x in range(1, N, 2)]
    return validate_factorisation(make_circulant(N, p.connections), [f1, f2, f3, f4])


def expected_types_general(p: RotationParams) -> set[CycleType]:
    ell, a = p.ell, p.a
    return {
        power_type((a * (ell + 4), 1), (4, a * (ell // 2 - 1))),
        power_type((6, ell * a // 2)),
    }
