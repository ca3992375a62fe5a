"""presentation_lab.analyzers.symbolic_base

BS(1,2) с символьными показателями: a - сумма башен (TowerSum), k - int или
TowerSum. Нужен там, где E_n с n >= 6 не материализуется (C'(1/6, E_n) до
n = 12). Любая операция вне класса сумм башен поднимает SymbolicRangeError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from entities.errors import ShapeError
from entities.tower import Exponent, TowerSum, collapse, exp_sign
from entities.word import Word


@dataclass(frozen=True)
class SymbolicBs:
    a: TowerSum = field(default_factory=TowerSum)
    k: Exponent = 0

    @classmethod
    def identity(cls) -> SymbolicBs:
        return cls()

    @classmethod
    def x_power(cls, i: Exponent) -> SymbolicBs:
        return cls(TowerSum.of(i), 0)

    @classmethod
    def y_power(cls, i: Exponent) -> SymbolicBs:
        return cls(TowerSum(), collapse(i))

    def is_identity(self) -> bool:
        return self.a.sign() == 0 and exp_sign(self.k) == 0

    def __mul__(self, other: SymbolicBs) -> SymbolicBs:
        if not isinstance(other, SymbolicBs):
            return NotImplemented
        return SymbolicBs(self.a + other.a.times_pow2(-self.k), collapse(self.k + other.k))

    def inverse(self) -> SymbolicBs:
        return SymbolicBs(-self.a.times_pow2(self.k), collapse(-self.k))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolicBs):
            return NotImplemented
        return (self.a - other.a).sign() == 0 and exp_sign(collapse(self.k - other.k)) == 0

    def __hash__(self) -> int:
        return hash((self.a, self.k))

    def __str__(self) -> str:
        return f"bs[{self.a}, {self.k}]"


def symbolic_eval(w: Word) -> SymbolicBs:
    acc = SymbolicBs.identity()
    for gen, exp in w.blocks:
        if gen == "x":
            acc = acc * SymbolicBs.x_power(exp)
        elif gen == "y":
            acc = acc * SymbolicBs.y_power(exp)
        else:
            raise ShapeError(f"symbolic_eval: generator {gen} outside BS(1,2)")
    return acc


def symbolic_in_x(e: SymbolicBs) -> Optional[Exponent]:
    if exp_sign(e.k) == 0 and e.a.is_integer():
        return collapse(e.a)
    return None


def symbolic_in_y(e: SymbolicBs) -> Optional[Exponent]:
    if e.a.sign() == 0:
        return collapse(e.k)
    return None
