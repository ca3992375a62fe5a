"""Готовые диаграммы для тестов и CLI (`diagram --fixture NAME`)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from diagrams.diagram import Diagram, DiagramBuilder
from entities.presentation import Presentation
from models.relator_factory import R0, make_mu0
from utils.text_formats import parse_presentation


@dataclass(frozen=True)
class Fixture:
    name:         str
    presentation: Presentation
    diagram:      Diagram
    h_relators:   Optional[Tuple[int, ...]] = None     # None - по умолчанию


def baum(k: int = 3) -> Fixture:
    """k клеток t^-1 x t y^-1 в одну полосу между двумя граничными t."""
    p = make_mu0()
    b = DiagramBuilder(p)
    cells = [b.add_cell(1) for _ in range(k)]
    for a, c in zip(cells, cells[1:]):
        b.glue(a, 2, c, 0)
    return Fixture(f"baum{k}", p, b.build())


def ring() -> Fixture:
    """Две t-клетки, склеенные по обоим t-рёбрам: кольцо."""
    p = make_mu0()
    b = DiagramBuilder(p)
    P = b.add_cell(1)               # T x t Y
    Q = b.add_cell(1, sign=-1)      # y T X t
    b.glue(P, 2, Q, 1).glue(Q, 3, P, 0).glue(P, 1, Q, 2)
    return Fixture("ring", p, b.build())


def single(p: Presentation = None, idx: int = 0) -> Fixture:
    p = p or Presentation.from_words(("x", "y"), [R0])
    b = DiagramBuilder(p)
    b.add_cell(idx)
    return Fixture("single", p, b.build())


def empty() -> Fixture:
    return Fixture("empty", make_mu0(), Diagram())


def loop_l1() -> Fixture:
    """Одна r-клетка t x t^-1, кабель возвращается на неё же."""
    p = parse_presentation("gens: x t\nrel: t x T")
    b = DiagramBuilder(p)
    f = b.add_cell(0)
    b.glue(f, 0, f, 2)
    return Fixture("L1", p, b.build(), h_relators=())


def parallel_l2() -> Fixture:
    """Две r-клетки и две t-полосы между ними без клеток посередине."""
    p = parse_presentation("gens: x y t\nrel: t t x\nrel: T T y")
    b = DiagramBuilder(p)
    f, g = b.add_cell(0), b.add_cell(1)
    b.glue(f, 0, g, 1).glue(f, 1, g, 0)
    return Fixture("L2", p, b.build())


def cable() -> Fixture:
    """Три r-клетки, четыре t-полосы, три t-кабеля."""
    p = parse_presentation("gens: x y t\nrel: t x t t\nrel: T T y T X\nrel: x t x T")
    b = DiagramBuilder(p)
    A, B, C = b.add_cell(0), b.add_cell(1), b.add_cell(2)
    b.glue(A, 0, C, 3).glue(A, 2, B, 1).glue(A, 3, B, 0).glue(B, 3, C, 1).glue(B, 4, C, 0)
    return Fixture("cable", p, b.build(), h_relators=())


def strips() -> Fixture:
    """Две r-клетки и две t-полосы по одной t-клетке, склеенные бок о бок: один кабель."""
    p = parse_presentation("gens: x y t\nrel: t t x\nrel: T T y\nrel: T x t Y\nrel: T y t X")
    b = DiagramBuilder(p)
    A, B = b.add_cell(0), b.add_cell(1)
    P, Q = b.add_cell(2), b.add_cell(3)
    b.glue(A, 0, P, 0).glue(P, 2, B, 1)
    b.glue(A, 1, Q, 0).glue(Q, 2, B, 0)
    b.glue(P, 3, Q, 1)
    return Fixture("strips", p, b.build())


FIXTURES: Dict[str, Callable[[], Fixture]] = {
    "baum":   baum,
    "ring":   ring,
    "single": single,
    "empty":  empty,
    "L1":     loop_l1,
    "L2":     parallel_l2,
    "cable":  cable,
    "strips": strips,
}
