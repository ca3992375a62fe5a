"""presentation_lab.models.tietze_engine

Элементарные преобразования Титце над копредставлением (x_1..x_r | a_1..a_p):

  op1     a_i = u v      -> u g^e g^-e v
  op1inv  u g^e g^-e v   -> u v
  op2     a_i            -> циклический сдвиг a_i
  op3     a_i            -> a_i^-1
  op4     a_i            -> a_i a_j,  i != j
  op5     добавить генератор x_{r+1} и соотношение x_{r+1}
          (расширенно: x_{r+1} a, a - слово в старых генераторах)
  op5inv  обратное к op5: убрать x_{r+1} и соотношение x_{r+1}
          (extended: x_{r+1} a без x_{r+1} в a)

Пустые соотношения как результат хода запрещены. Журнал площади:
только op4 может уменьшить площадь слова, и не больше чем вдвое.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from entities.errors import InvalidMoveError, ShapeError
from entities.presentation import Presentation, TietzeMove
from entities.word import Letter, RawWord, Word, invert_letters

logger = logging.getLogger(__name__)


# на одно вхождение y: op2, op3, op2, op4, op1inv, op2
ELIMINATION_CONSTANT = 6


# ── Ходы ─────────────────────────────────────────────────────────────

def _relator(p: Presentation, i: Optional[int]) -> RawWord:
    if i is None or not 0 <= i < len(p.relators):
        raise InvalidMoveError(f"relator index {i} out of range 0..{len(p.relators) - 1}")
    return p.relators[i]


def _with(p: Presentation, i: int, rel: RawWord) -> Presentation:
    if not rel:
        raise InvalidMoveError(f"relator {i} would become empty")
    rels = list(p.relators)
    rels[i] = rel
    return replace(p, relators=tuple(rels))


def fresh_generator(p: Presentation) -> str:
    k = len(p.generators) + 1
    while f"x_{k}" in p.generators:
        k += 1
    return f"x_{k}"


def apply_move(p: Presentation, mv: TietzeMove) -> Presentation:
    kind = mv.kind

    if kind == "op1":
        rel = _relator(p, mv.i)
        if mv.gen not in p.generators:
            raise InvalidMoveError(f"op1: generator {mv.gen!r} not in presentation")
        if mv.pos is None or not 0 <= mv.pos <= len(rel):
            raise InvalidMoveError(f"op1: position {mv.pos} outside 0..{len(rel)}")
        pair = (Letter(mv.gen, mv.sign), Letter(mv.gen, -mv.sign))
        return _with(p, mv.i, rel[:mv.pos] + pair + rel[mv.pos:])

    if kind == "op1inv":
        rel = _relator(p, mv.i)
        if mv.pos is None or not 0 <= mv.pos < len(rel) - 1:
            raise InvalidMoveError(f"op1inv: position {mv.pos} outside 0..{len(rel) - 2}")
        if rel[mv.pos] != rel[mv.pos + 1].inverse():
            raise InvalidMoveError(
                f"op1inv: letters {rel[mv.pos]} {rel[mv.pos + 1]} at {mv.pos} are not an inverse pair"
            )
        return _with(p, mv.i, rel[:mv.pos] + rel[mv.pos + 2:])

    if kind == "op2":
        rel = _relator(p, mv.i)
        if not rel:
            raise InvalidMoveError(f"op2: relator {mv.i} is empty")
        k = mv.rot % len(rel)
        return _with(p, mv.i, rel[k:] + rel[:k])

    if kind == "op3":
        return _with(p, mv.i, invert_letters(_relator(p, mv.i)))

    if kind == "op4":
        rel = _relator(p, mv.i)
        other = _relator(p, mv.j)
        if mv.i == mv.j:
            raise InvalidMoveError("op4: i and j must differ")
        return _with(p, mv.i, rel + other)

    if kind == "op5":
        name = fresh_generator(p)
        tail: RawWord = ()
        if mv.word is not None:
            extra = {l.generator for l in mv.word} - set(p.generators)
            if extra:
                raise InvalidMoveError(f"op5: word uses {sorted(extra)} outside generators")
            tail = tuple(mv.word)
        return Presentation(p.generators + (name,), p.relators + ((Letter(name),) + tail,))

    if kind == "op5inv":
        g = mv.gen
        if g not in p.generators:
            raise InvalidMoveError(f"op5inv: generator {g!r} not in presentation")
        hits = [
            idx for idx, rel in enumerate(p.relators)
            if rel == (Letter(g),)
            or (mv.extended and rel and rel[0] == Letter(g) and all(l.generator != g for l in rel[1:]))
        ]
        if not hits:
            form = f"{g} a without {g} in a" if mv.extended else g
            raise InvalidMoveError(f"op5inv: no relator of the form {form}")
        idx = hits[0]
        for other, rel in enumerate(p.relators):
            if other != idx and any(l.generator == g for l in rel):
                raise InvalidMoveError(f"op5inv: {g} also occurs in relator {other}")
        gens = tuple(x for x in p.generators if x != g)
        rels = tuple(r for k, r in enumerate(p.relators) if k != idx)
        return Presentation(gens, rels)

    raise InvalidMoveError(f"unknown move {kind!r}")


# ── Журнал и воспроизведение ─────────────────────────────────────────

@dataclass
class AreaLedger:
    """Нижняя граница: Area_final(w) >= Area_initial(w) * factor."""

    tracked: Optional[Word] = None
    factor:  Fraction       = Fraction(1)
    history: List[TietzeMove] = field(default_factory=list)

    @property
    def op4_count(self) -> int:
        return sum(1 for mv in self.history if mv.kind == "op4")

    def record(self, mv: TietzeMove) -> None:
        self.history.append(mv)
        if mv.kind == "op4":
            self.factor /= 2

    def area_lower_bound(self, area_before: int) -> Fraction:
        return area_before * self.factor

    @staticmethod
    def lower_bound_moves(area_before: int) -> int:
        """Минимум op4 в тривиализующем скрипте: ceil(log2 area)."""
        if area_before <= 1:
            return 0
        return (area_before - 1).bit_length()


def replay(
    p: Presentation,
    script: Sequence[TietzeMove],
    ledger_word: Optional[Word] = None,
) -> Tuple[Presentation, AreaLedger]:
    ledger = AreaLedger(tracked=ledger_word)
    current = p
    for step, mv in enumerate(script):
        try:
            current = apply_move(current, mv)
        except InvalidMoveError as e:
            logger.warning(f"replay stopped at step {step}: {e}")
            raise InvalidMoveError(str(e), step=step, move=mv) from e
        ledger.record(mv)
    logger.debug(f"replay: {len(script)} moves, {ledger.op4_count} op4, factor {ledger.factor}")
    return current, ledger


# ── Исключение y ─────────────────────────────────────────────────────

_R0 = tuple(Letter(g, s) for g, s in (("y", -1), ("x", 1), ("y", 1), ("x", -1), ("x", -1)))
_R1 = tuple(Letter(g, s) for g, s in (("t", -1), ("x", 1), ("t", 1), ("y", -1)))


class _Eliminator:
    """Подстановка y^e -> t^-1 x^e t в соотношения через r1.

    Форма A соотношения r1: y^-1 t^-1 x t  (для вхождения y),
    форма B:                y t^-1 x^-1 t  (для вхождения y^-1).
    """

    def __init__(self, p: Presentation, r1: int):
        self.p = p
        self.r1 = r1
        self.form = "orig"
        self.script: List[TietzeMove] = []

    def _do(self, mv: TietzeMove) -> None:
        self.p = apply_move(self.p, mv)
        self.script.append(mv)

    def switch_to(self, form: str) -> None:
        if self.form == form:
            return
        if self.form == "orig":
            if form == "A":
                self._do(TietzeMove("op2", i=self.r1, rot=3))
            else:
                self._do(TietzeMove("op3", i=self.r1))
        else:
            # A <-> B: обратить и повернуть на 3
            self._do(TietzeMove("op3", i=self.r1))
            self._do(TietzeMove("op2", i=self.r1, rot=3))
        self.form = form

    def substitute(self, i: int) -> None:
        positions = [k for k, l in enumerate(self.p.relators[i]) if l.generator == "y"]
        for pos in reversed(positions):
            rel = self.p.relators[i]
            size = len(rel)
            sign = rel[pos].sign
            if pos + 1 != size:
                self._do(TietzeMove("op2", i=i, rot=pos + 1))
            self.switch_to("A" if sign > 0 else "B")
            self._do(TietzeMove("op4", i=i, j=self.r1))
            self._do(TietzeMove("op1inv", i=i, pos=size - 1))
            back = size - pos - 1
            if back:
                self._do(TietzeMove("op2", i=i, rot=back))


def eliminate_y(mu: Presentation) -> Tuple[Presentation, List[TietzeMove]]:
    """mu_i -> <x, t | x^{x^t} x^-2, a_i(y = t^-1 x t)>."""
    if mu.generators != ("x", "y", "t"):
        raise ShapeError(f"eliminate_y: expected generators x y t, got {mu.generators}")
    if len(mu.relators) < 2 or mu.relators[0] != _R0 or mu.relators[1] != _R1:
        raise ShapeError("eliminate_y: relators 0 and 1 must be y^-1 x y x^-2 and t^-1 x t y^-1")
    el = _Eliminator(mu, r1=1)
    for i in range(len(mu.relators)):
        if i != 1:
            el.substitute(i)
    el.switch_to("B")
    el._do(TietzeMove("op5inv", gen="y", extended=True))
    logger.debug(f"eliminate_y: {len(el.script)} moves, total length {mu.total_length()}")
    return el.p, el.script
