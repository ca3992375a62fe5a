"""presentation_lab.analyzers.hnn_britton

Группа Баумслага-Герстена G = <x, y, t | y^-1 x y = x^2, t^-1 x t = y>
как HNN-расширение BS(1,2) с проходной буквой t, A = <x>, B = <y>,
phi(x^i) = y^i.

Слово разбивается по буквам t в последовательность
    g_0, t^{d_1}, g_1, ..., t^{d_m}, g_m
с g_i в базовой группе. Щипок (pinch) - пара t^-1 g t с g = x^i или
t g t^-1 с g = y^i; его стоимость |i| = длина t-полосы, которая его
заклеивает.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

from analyzers.bs_arith import BsElement, bs_eval, in_x_subgroup, in_y_subgroup
from analyzers.symbolic_base import SymbolicBs, symbolic_eval, symbolic_in_x, symbolic_in_y
from entities.errors import fmt_int
from entities.tower import Exponent, collapse, materialize
from entities.word import STABLE, Word

logger = logging.getLogger(__name__)

DOWN = "t^-1 g t"
UP   = "t g t^-1"


# ── HNN-данные ───────────────────────────────────────────────────────

@dataclass(frozen=True)
class HnnSpec:
    """Всё, что Britton-редукции нужно знать о базовой группе."""

    name:      str
    evaluate:  Callable[[Word], Any]
    identity:  Callable[[], Any]
    in_a:      Callable[[Any], Optional[Exponent]]
    in_b:      Callable[[Any], Optional[Exponent]]
    phi:       Callable[[Exponent], Any]
    phi_inv:   Callable[[Exponent], Any]
    cost:      Callable[[Exponent], Exponent] = abs
    stable:    str = STABLE


BAUMSLAG_GERSTEN = HnnSpec(
    name="G",
    evaluate=bs_eval,
    identity=BsElement.identity,
    in_a=in_x_subgroup,
    in_b=in_y_subgroup,
    phi=BsElement.y_power,
    phi_inv=BsElement.x_power,
)

SYMBOLIC_GERSTEN = HnnSpec(
    name="G (symbolic)",
    evaluate=symbolic_eval,
    identity=SymbolicBs.identity,
    in_a=symbolic_in_x,
    in_b=symbolic_in_y,
    phi=SymbolicBs.y_power,
    phi_inv=SymbolicBs.x_power,
)


# ── Последовательности ───────────────────────────────────────────────

@dataclass(frozen=True)
class ReducedSequence:
    g0:   Any
    tail: Tuple[Tuple[int, Any], ...] = ()

    @property
    def m(self) -> int:
        return len(self.tail)

    def signs(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.tail)

    def elements(self) -> List[Any]:
        return [self.g0] + [g for _, g in self.tail]

    def is_identity(self) -> bool:
        return not self.tail and self.g0.is_identity()

    def inverse(self) -> ReducedSequence:
        """(g0 t^d1 g1 ... t^dm gm)^-1 = gm^-1 t^-dm ... t^-d1 g0^-1."""
        gs = self.elements()
        ds = self.signs()
        tail = tuple((-ds[i], gs[i].inverse()) for i in reversed(range(len(ds))))
        return ReducedSequence(gs[-1].inverse(), tail)


@dataclass(frozen=True)
class Pinch:
    position:  int
    direction: str
    exponent:  Exponent
    cost:      Exponent


def parse_sequence(w: Word, spec: HnnSpec = BAUMSLAG_GERSTEN) -> ReducedSequence:
    parts: List[Tuple[int, Word]] = []
    current: List = []
    sign = 0
    for gen, exp in w.blocks:
        if gen != spec.stable:
            current.append((gen, exp))
            continue
        n = materialize(exp)
        step = 1 if n > 0 else -1
        for _ in range(abs(n)):
            parts.append((sign, Word(tuple(current))))
            current = []
            sign = step
    parts.append((sign, Word(tuple(current))))

    g0 = spec.evaluate(parts[0][1])
    tail = tuple((d, spec.evaluate(seg)) for d, seg in parts[1:])
    return ReducedSequence(g0, tail)


def _pinch_at(spec: HnnSpec, d1: int, g: Any, d2: int, position: int) -> Optional[Pinch]:
    if d1 == -1 and d2 == 1:
        i = spec.in_a(g)
        if i is not None:
            return Pinch(position, DOWN, i, spec.cost(i))
    elif d1 == 1 and d2 == -1:
        i = spec.in_b(g)
        if i is not None:
            return Pinch(position, UP, i, spec.cost(i))
    return None


def find_pinches(s: ReducedSequence, spec: HnnSpec = BAUMSLAG_GERSTEN) -> List[Pinch]:
    out: List[Pinch] = []
    for pos in range(s.m - 1):
        d1, g = s.tail[pos]
        d2, _ = s.tail[pos + 1]
        p = _pinch_at(spec, d1, g, d2, pos)
        if p is not None:
            out.append(p)
    return out


def cyclic_pinches(s: ReducedSequence, spec: HnnSpec = BAUMSLAG_GERSTEN) -> List[Pinch]:
    """Щипки циклической последовательности; позиция = номер поворота.

    Между последней и первой t-буквой стоит g_m * g_0.
    """
    m = s.m
    if m < 2:
        return []
    out = find_pinches(s, spec)
    d_last, g_last = s.tail[-1]
    d_first, _ = s.tail[0]
    p = _pinch_at(spec, d_last, g_last * s.g0, d_first, m - 1)
    if p is not None:
        out.append(p)
    return out


# ── Предикаты ────────────────────────────────────────────────────────

def is_n_reduced(w: Word, n: Exponent, spec: HnnSpec = BAUMSLAG_GERSTEN) -> bool:
    """Каждый щипок стоит >= N (больше N-1 t-клеток)."""
    return all(p.cost >= n for p in find_pinches(parse_sequence(w, spec), spec))


def is_cyclically_n_reduced(w: Word, n: Exponent, spec: HnnSpec = BAUMSLAG_GERSTEN) -> bool:
    s = parse_sequence(w, spec)
    for p in cyclic_pinches(s, spec):
        if p.cost < n:
            logger.debug(f"rotation {p.position}: {p.direction} cost {fmt_int(p.cost)} < {fmt_int(n)}")
            return False
    return True


# ── Britton ──────────────────────────────────────────────────────────

def britton_reduce(w: Word, spec: HnnSpec = BAUMSLAG_GERSTEN) -> Tuple[ReducedSequence, Exponent]:
    """Снять все щипки стеком. Бюджет проверяет арифметика базовой группы."""
    s = parse_sequence(w, spec)
    gs: List[Any] = [s.g0]
    ds: List[int] = []
    total: Exponent = 0
    removed = 0
    for d, g in s.tail:
        if ds:
            p = _pinch_at(spec, ds[-1], gs[-1], d, len(ds) - 1)
            if p is not None:
                image = spec.phi(p.exponent) if p.direction == DOWN else spec.phi_inv(p.exponent)
                ds.pop()
                gs.pop()
                gs[-1] = gs[-1] * image * g
                total = total + p.cost
                removed += 1
                continue
        ds.append(d)
        gs.append(g)
    logger.debug(f"britton: {removed} pinches removed, {len(ds)} t-letters left")
    return ReducedSequence(gs[0], tuple(zip(ds, gs[1:]))), collapse(total)


def is_trivial_in_g(w: Word, spec: HnnSpec = BAUMSLAG_GERSTEN) -> bool:
    reduced, _ = britton_reduce(w, spec)
    return reduced.is_identity()


# ── Вывод ────────────────────────────────────────────────────────────

def format_sequence(s: ReducedSequence) -> str:
    parts = [str(s.g0)]
    for d, g in s.tail:
        parts.append("t^1" if d > 0 else "t^-1")
        parts.append(str(g))
    return ", ".join(parts)
