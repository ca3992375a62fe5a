"""presentation_lab.entities.tower

Башня E_0 = 1, E_{n+1} = 2^{E_n} и символьные суммы над ней.

TowerSum хранит линейную комбинацию  sum c_k * E_k + c  с рациональными
коэффициентами. Уровни 0..2 сразу сворачиваются в константу. Сравнение
точное, пока все уровни <= Config.TOWER_EXACT_MAX (E_5 ещё помещается в
int на 65537 бит); выше знак определяет старший уровень: E_6 = 2^{E_5}
поглощает любые младшие слагаемые с небольшими коэффициентами.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple, Union

from config.settings import Config
from entities.errors import BudgetExceededError, SymbolicRangeError

_FOLD_MAX = 2

Number = Union[int, Fraction]


@lru_cache(maxsize=None)
def tower_value(n: int) -> int:
    """Точное E_n; только для n <= Config.TOWER_EXACT_MAX."""
    if n < 0:
        raise ValueError(f"tower index must be >= 0, got {n}")
    if n > Config.TOWER_EXACT_MAX:
        bits = tower_value(n - 1) + 1 if n - 1 <= Config.TOWER_EXACT_MAX else f"E_{n - 1}+1"
        raise BudgetExceededError(bits, Config.BUDGET_BITS, what=f"E_{n}")
    value = 1
    for _ in range(n):
        value = 1 << value
    return value


class TowerSum:
    __slots__ = ("_coeffs", "_const")

    def __init__(self, coeffs: Mapping[int, Number] = None, const: Number = 0):
        merged: Dict[int, Fraction] = {}
        folded = Fraction(const)
        for level, value in (coeffs or {}).items():
            value = Fraction(value)
            if value == 0:
                continue
            if level <= _FOLD_MAX:
                folded += value * tower_value(level)
            else:
                merged[level] = merged.get(level, Fraction(0)) + value
        self._coeffs: Tuple[Tuple[int, Fraction], ...] = tuple(
            sorted((lvl, v) for lvl, v in merged.items() if v != 0)
        )
        self._const = folded

    # ── конструкторы ──────────────────────────────────────────────────

    @classmethod
    def tower(cls, n: int) -> TowerSum:
        return cls({n: 1})

    @classmethod
    def of(cls, value: Union[Number, TowerSum]) -> TowerSum:
        if isinstance(value, TowerSum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(const=value)
        raise TypeError(f"cannot lift {type(value).__name__} to TowerSum")

    # ── доступ ────────────────────────────────────────────────────────

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def const(self) -> Fraction:
        return self._const

    @property
    def top_level(self) -> int:
        return self._coeffs[-1][0] if self._coeffs else -1

    def is_constant(self) -> bool:
        return not self._coeffs

    def single_level(self) -> Tuple[int, Fraction]:
        """(level, coeff) для вида c*E_k без константы, иначе SymbolicRangeError."""
        if len(self._coeffs) != 1 or self._const != 0:
            raise SymbolicRangeError(f"{self} is not a single tower term")
        return self._coeffs[0]

    # ── точные значения ──────────────────────────────────────────────

    def _exact_low(self) -> Fraction:
        total = self._const
        for level, value in self._coeffs:
            if level <= Config.TOWER_EXACT_MAX:
                total += value * tower_value(level)
        return total

    def _high(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple((lvl, v) for lvl, v in self._coeffs if lvl > Config.TOWER_EXACT_MAX)

    def sign(self) -> int:
        high = self._high()
        if high:
            return 1 if high[-1][1] > 0 else -1
        low = self._exact_low()
        return (low > 0) - (low < 0)

    def is_integer(self) -> bool:
        high = self._high()
        if not high:
            return self._exact_low().denominator == 1
        if self._exact_low().denominator != 1:
            return False
        # c*E_k с c = p/2^e целое, пока e <= E_{k-1}; при k >= 6 это всегда так
        return all(_is_pow2(v.denominator) for _, v in high)

    def to_int(self) -> int:
        if self._high():
            raise BudgetExceededError(
                f"E_{self.top_level - 1}+1", Config.BUDGET_BITS, what=f"materialize {self}"
            )
        low = self._exact_low()
        if low.denominator != 1:
            raise SymbolicRangeError(f"{self} is not an integer")
        return int(low)

    # ── арифметика ───────────────────────────────────────────────────

    def __add__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        other = TowerSum.of(other)
        coeffs = dict(self._coeffs)
        for level, value in other._coeffs:
            coeffs[level] = coeffs.get(level, Fraction(0)) + value
        return TowerSum(coeffs, self._const + other._const)

    __radd__ = __add__

    def __neg__(self) -> TowerSum:
        return TowerSum({lvl: -v for lvl, v in self._coeffs}, -self._const)

    def __sub__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return self + (-TowerSum.of(other))

    def __rsub__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return TowerSum.of(other) + (-self)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return TowerSum({lvl: v * scalar for lvl, v in self._coeffs}, self._const * scalar)

    __rmul__ = __mul__

    def __abs__(self) -> TowerSum:
        return -self if self.sign() < 0 else self

    def times_pow2(self, shift: Union[int, TowerSum]) -> TowerSum:
        """self * 2^shift.

        Символьный сдвиг допускается только в двух видах:
          c * 2^{E_k + d}         = c*2^d * E_{k+1}
          c*E_{k+1} * 2^{-E_k+d}  = c*2^d
        Остальное - SymbolicRangeError.
        """
        if self.sign() == 0:
            return TowerSum()
        shift = collapse(shift)
        if isinstance(shift, int):
            if abs(shift) > Config.BUDGET_BITS:
                raise BudgetExceededError(abs(shift), Config.BUDGET_BITS, what="shift")
            factor = Fraction(2) ** shift
            return TowerSum({lvl: v * factor for lvl, v in self._coeffs}, self._const * factor)

        if len(shift._coeffs) == 1 and shift.const.denominator == 1:
            level, coeff = shift._coeffs[0]
            rest = int(shift.const)
            if coeff == 1 and self.is_constant():
                return TowerSum({level + 1: self._const}).times_pow2(rest)
            if coeff == -1 and len(self._coeffs) == 1 and self._const == 0:
                own_level, own_coeff = self._coeffs[0]
                if own_level == level + 1:
                    return TowerSum(const=own_coeff).times_pow2(rest)
        if not shift._high() and shift.is_integer():
            # сдвиг вычисляется точно: E_3, E_4, E_5 - c и т.п.
            exact = shift.to_int()
            if abs(exact) <= Config.BUDGET_BITS:
                return self.times_pow2(exact)
        raise SymbolicRangeError(f"({self}) * 2^({shift}) is not a tower sum")

    def eq_times_pow2(self, other, shift: Union[int, TowerSum]) -> bool:
        """self == other * 2^shift; SymbolicRangeError если правая часть не сумма башен."""
        other = TowerSum.of(other)
        if other.sign() == 0:
            return self.sign() == 0
        return self == other.times_pow2(shift)

    # ── сравнение ────────────────────────────────────────────────────

    def _cmp(self, other) -> int:
        return (self - TowerSum.of(other)).sign()

    def __eq__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (TowerSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        high = self._high()
        low = self._exact_low()
        return hash((high, low)) if high else hash(low)

    def __bool__(self) -> bool:
        return self.sign() != 0

    # ── вывод ────────────────────────────────────────────────────────

    def __str__(self) -> str:
        parts = []
        for level, value in reversed(self._coeffs):
            if value == 1:
                term = f"E{level}"
            elif value == -1:
                term = f"-E{level}"
            else:
                term = f"{value}*E{level}"
            parts.append(term)
        if self._const != 0 or not parts:
            parts.append(str(self._const))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TowerSum({self})"


Exponent = Union[int, TowerSum]


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def collapse(value: Union[Exponent, Fraction]) -> Union[Exponent, Fraction]:
    """TowerSum без символьной части -> int (или Fraction)."""
    if isinstance(value, TowerSum) and value.is_constant():
        c = value.const
        return int(c) if c.denominator == 1 else c
    return value


def is_symbolic(value) -> bool:
    return isinstance(value, TowerSum) and not value.is_constant()


def exp_sign(value: Exponent) -> int:
    if isinstance(value, TowerSum):
        return value.sign()
    return (value > 0) - (value < 0)


def exp_abs(value: Exponent) -> Exponent:
    return abs(value)


def materialize(value: Exponent) -> int:
    if isinstance(value, TowerSum):
        return value.to_int()
    return value
