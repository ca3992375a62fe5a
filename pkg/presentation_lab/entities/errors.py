"""Исключения presentation_lab.

Отрицательные вердикты (nontrivial, not reduced, area not found) -
это результаты, а не ошибки. Исключения только для выхода за бюджет,
плохого ввода и нарушенных предусловий.
"""

from __future__ import annotations

from typing import Optional, Union


class PresentationLabError(Exception):
    pass


class WordFormatError(PresentationLabError, ValueError):
    """Текст не разбирается как слово / копредставление / скрипт."""


class ShapeError(PresentationLabError, ValueError):
    """Вход не той формы: t в слове базовой группы, не-семейство, кривая диаграмма."""


def fmt_int(value: object) -> str:
    """Печать без str() от башенных int: больше 64 бит -> ~2^k."""
    if isinstance(value, int) and not isinstance(value, bool) and value.bit_length() > 64:
        return f"~2^{value.bit_length() - 1}"
    return str(value)


class BudgetExceededError(PresentationLabError):
    """Точная арифметика вышла за Config.BUDGET_BITS."""

    def __init__(self, bits: Union[int, str], limit: int, what: str = ""):
        self.bits  = bits
        self.limit = limit
        self.what  = what
        where = f" ({what})" if what else ""
        super().__init__(
            f"budget exceeded{where}: needs {fmt_int(bits)}-bit integers, limit {limit}"
        )


class SymbolicRangeError(PresentationLabError):
    """Символьное значение вышло из класса сумм башен."""


class NotCyclicallyReducedError(PresentationLabError):
    def __init__(self, word_index: int, rotation: int, cost: int, n: object):
        self.word_index = word_index
        self.rotation   = rotation
        self.cost       = cost
        self.n          = n
        super().__init__(
            f"word {word_index} rotation {rotation}: pinch of cost {fmt_int(cost)} < N={fmt_int(n)}"
        )


class InvalidMoveError(PresentationLabError, ValueError):
    def __init__(self, message: str, step: Optional[int] = None, move: object = None):
        self.step = step
        self.move = move
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(prefix + message)
