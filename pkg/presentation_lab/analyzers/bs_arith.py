"""presentation_lab.analyzers.bs_arith

Точная арифметика в BS(1,2) = <x, y | y^-1 x y = x^2>.

Элемент хранится как аффинное отображение s -> 2^{-k} s + a с двоично-
рациональным a. Образующие: x = (1, 0), y = (0, 1). Представление точное,
поэтому равенство в группе = равенство пар (a, k).

Соглашение x^y = y^-1 x y; из него следуют все знаки ниже.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Union

from config.settings import Config
from entities.errors import BudgetExceededError, ShapeError, fmt_int
from entities.tower import materialize
from entities.word import STABLE, Word

logger = logging.getLogger(__name__)


def _check_bits(bits: int, what: str) -> None:
    if bits > Config.BUDGET_BITS:
        logger.warning(f"budget: {what} needs {fmt_int(bits)} bits > {Config.BUDGET_BITS}")
        raise BudgetExceededError(bits, Config.BUDGET_BITS, what=what)


def _valuation(n: int) -> int:
    return (n & -n).bit_length() - 1


# ── Dyadic ────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Dyadic:
    """numerator / 2^exponent2, канонично: числитель нечётен или (0, 0)."""

    numerator: int = 0
    exponent2: int = 0

    def __post_init__(self):
        if self.exponent2 < 0:
            raise ValueError("exponent2 must be >= 0")
        if self.exponent2 > 0 and self.numerator % 2 == 0:
            raise ValueError(f"non-canonical dyadic {self.numerator}/2^{self.exponent2}")

    @classmethod
    def make(cls, numerator: int, exponent2: int = 0) -> Dyadic:
        if numerator == 0:
            return cls(0, 0)
        if exponent2 < 0:
            _check_bits(numerator.bit_length() - exponent2, "dyadic scale")
            return cls(numerator << -exponent2, 0)
        if exponent2 > 0:
            v = min(_valuation(numerator), exponent2)
            numerator >>= v
            exponent2 -= v
        return cls(numerator, exponent2)

    @classmethod
    def of(cls, value: Union[int, Dyadic]) -> Dyadic:
        if isinstance(value, Dyadic):
            return value
        return cls.make(value, 0)

    # ── свойства ──────────────────────────────────────────────────────

    def sign(self) -> int:
        return (self.numerator > 0) - (self.numerator < 0)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def is_integer(self) -> bool:
        return self.exponent2 == 0

    def to_int(self) -> int:
        if self.exponent2:
            raise ValueError(f"{self} is not an integer")
        return self.numerator

    def valuation(self) -> int:
        """2-адическое нормирование (для нуля не определено)."""
        if self.exponent2:
            return -self.exponent2
        return _valuation(self.numerator)

    def odd_part(self) -> int:
        return self.numerator >> _valuation(self.numerator) if not self.exponent2 else self.numerator

    # ── арифметика ───────────────────────────────────────────────────

    def __add__(self, other):
        if isinstance(other, int):
            other = Dyadic.of(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        e = max(self.exponent2, other.exponent2)
        _check_bits(max(self.numerator.bit_length(), other.numerator.bit_length()) + e, "dyadic add")
        num = (self.numerator << (e - self.exponent2)) + (other.numerator << (e - other.exponent2))
        return Dyadic.make(num, e)

    __radd__ = __add__

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.numerator, self.exponent2)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic.of(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return Dyadic.of(other) + (-self)
        return NotImplemented

    def times_pow2(self, shift: int) -> Dyadic:
        """self * 2^shift с проверкой бюджета до вычисления."""
        if self.numerator == 0:
            return self
        shift = materialize(shift)
        if shift > 0:
            drop = min(shift, self.exponent2)
            rest = shift - drop
            if rest:
                _check_bits(self.numerator.bit_length() + rest, "shift")
            return Dyadic.make(self.numerator << rest, self.exponent2 - drop)
        if shift < 0:
            _check_bits(self.exponent2 - shift, "shift")
            return Dyadic.make(self.numerator, self.exponent2 - shift)
        return self

    def eq_times_pow2(self, other: Dyadic, shift: int) -> bool:
        """self == other * 2^shift без самого сдвига (годится для shift ~ 2^65536)."""
        other = Dyadic.of(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.odd_part() != other.odd_part():
            return False
        return self.valuation() == other.valuation() + materialize(shift)

    def __str__(self) -> str:
        if self.exponent2 == 0:
            return fmt_int(self.numerator)
        return f"{fmt_int(self.numerator)}/2^{fmt_int(self.exponent2)}"


# ── BsElement ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BsElement:
    """Аффинное отображение s -> 2^{-k} s + a."""

    a: Dyadic = Dyadic()
    k: int    = 0

    @classmethod
    def identity(cls) -> BsElement:
        return cls()

    @classmethod
    def x_power(cls, i: int) -> BsElement:
        return cls(Dyadic.of(i), 0)

    @classmethod
    def y_power(cls, i: int) -> BsElement:
        return cls(Dyadic(), i)

    def is_identity(self) -> bool:
        return self.a.is_zero() and self.k == 0

    def __mul__(self, other: BsElement) -> BsElement:
        if not isinstance(other, BsElement):
            return NotImplemented
        return BsElement(self.a + other.a.times_pow2(-self.k), self.k + other.k)

    def inverse(self) -> BsElement:
        return BsElement(-self.a.times_pow2(self.k), -self.k)

    def __str__(self) -> str:
        return f"bs({fmt_int(self.a.numerator)}, {fmt_int(self.a.exponent2)}, {fmt_int(self.k)})"


def bs_eval(w: Word) -> BsElement:
    acc = BsElement.identity()
    for gen, exp in w.blocks:
        if gen == STABLE:
            raise ShapeError(f"bs_eval: word contains {STABLE}: {w}")
        n = materialize(exp)
        if gen == "x":
            acc = acc * BsElement.x_power(n)
        elif gen == "y":
            acc = acc * BsElement.y_power(n)
        else:
            raise ShapeError(f"bs_eval: generator {gen} outside BS(1,2)")
    return acc


def in_x_subgroup(e: BsElement) -> Optional[int]:
    if e.k == 0 and e.a.is_integer():
        return e.a.to_int()
    return None


def in_y_subgroup(e: BsElement) -> Optional[int]:
    if e.a.is_zero():
        return e.k
    return None


def solitar_solve(i: int, m: int, j: int) -> Optional[int]:
    """k с y^i x^m y^j = x^k, если такое целое k есть.

    y^i x^m y^j = (m * 2^{-i}, i + j), поэтому k = m * 2^{-i} = m * 2^{j}
    при i = -j: отношение m/k равно 2^{-j}.
    """
    if i + j != 0:
        return None
    return in_x_subgroup(BsElement(Dyadic.of(m).times_pow2(-i), 0))
