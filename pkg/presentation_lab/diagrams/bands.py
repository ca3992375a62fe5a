"""presentation_lab.diagrams.bands

t-полосы и t-кабели.

Клетки делятся на
  t     соотношения mu_H с одной t и одной t^-1 (x^t = y)
  base  соотношения mu_H без t
  r     все остальные соотношения
t-полоса идёт от t-ребра якоря (r-клетка или граница) через t-клетки до
другого якоря, либо замыкается в кольцо. Полоса без клеток - это одно
t-ребро между двумя якорями. Соседние полосы одного кабеля начинаются и
кончаются на соседних буквах t^{+-1} тех же якорей, и между ними лежат
только клетки mu_H.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from diagrams.diagram import BOUNDARY, Diagram
from entities.errors import ShapeError
from entities.presentation import Presentation
from entities.word import STABLE

logger = logging.getLogger(__name__)

T_CELL = "t"
BASE   = "base"
R_CELL = "r"

Anchor = Tuple[int, int]     # (грань, t-дарт на ней)


@dataclass(frozen=True)
class TBand:
    cells:   Tuple[int, ...]
    is_ring: bool
    ends:    Tuple[Anchor, ...] = ()

    @property
    def length(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class TCable:
    bands: Tuple[int, ...]                             # индексы в списке полос
    ends:  Tuple[Tuple[int, Tuple[int, ...]], ...]     # (якорь, его t-дарты)

    @property
    def faces(self) -> Tuple[int, int]:
        return self.ends[0][0], self.ends[1][0]


# ── Классификация ────────────────────────────────────────────────────

def default_h_relators(p: Presentation) -> Tuple[int, ...]:
    out = []
    for idx, rel in enumerate(p.relators):
        signs = sorted(l.sign for l in rel if l.generator == STABLE)
        if signs in ([], [-1, 1]):
            out.append(idx)
    return tuple(out)


def classify(d: Diagram, p: Presentation, h_relators: Optional[Iterable[int]] = None) -> Dict[int, str]:
    h = set(default_h_relators(p) if h_relators is None else h_relators)
    kinds = {}
    for f in d.faces:
        if f.kind == BOUNDARY:
            kinds[f.id] = BOUNDARY
        elif f.relator in h:
            has_t = any(l.generator == STABLE for l in p.relators[f.relator])
            kinds[f.id] = T_CELL if has_t else BASE
        else:
            kinds[f.id] = R_CELL
    return kinds


def t_darts(d: Diagram, face_id: int) -> List[int]:
    return [x for x in d.face_darts(d.face(face_id)) if d.labels[x].generator == STABLE]


# ── Полосы ───────────────────────────────────────────────────────────

def trace_bands(d: Diagram, p: Presentation, h_relators: Optional[Iterable[int]] = None) -> List[TBand]:
    kinds = classify(d, p, h_relators)
    face_of = d.face_of
    tdarts = {fid: t_darts(d, fid) for fid in kinds}
    for fid, kind in kinds.items():
        if kind == T_CELL and len(tdarts[fid]) != 2:
            raise ShapeError(f"t-cell {fid} has {len(tdarts[fid])} t-edges")

    def other(x: int) -> int:
        a, b = tdarts[face_of[x]]
        return b if x == a else a

    bands: List[TBand] = []
    visited: Set[int] = set()
    used: Set[int] = set()
    anchors = sorted(fid for fid, k in kinds.items() if k in (R_CELL, BOUNDARY))
    for anchor in anchors:
        for a in tdarts[anchor]:
            if a in used:
                continue
            cells: List[int] = []
            x = d.reverse[a]
            while kinds[face_of[x]] == T_CELL:
                f = face_of[x]
                if f in visited:
                    raise ShapeError(f"t-cell {f} reached twice while tracing a band")
                visited.add(f)
                cells.append(f)
                x = d.reverse[other(x)]
            used.update((a, x))
            bands.append(TBand(tuple(cells), False, ((anchor, a), (face_of[x], x))))

    for f in sorted(fid for fid, k in kinds.items() if k == T_CELL):
        if f in visited:
            continue
        cells = []
        x = tdarts[f][0]
        while True:
            g = face_of[x]
            if kinds[g] != T_CELL:
                raise ShapeError(f"band through t-cell {f} leaves at face {g}")
            if g in visited:
                if g != f:
                    raise ShapeError(f"t-cell {g} reached twice while tracing a ring")
                break
            visited.add(g)
            cells.append(g)
            x = d.reverse[other(x)]
        bands.append(TBand(tuple(cells), True))

    logger.debug(f"trace_bands: {len(bands)} bands, {sum(b.is_ring for b in bands)} rings")
    return bands


# ── Кабели ───────────────────────────────────────────────────────────

def _gaps(d: Diagram, tdarts: List[int], a1: int, a2: int) -> List[List[int]]:
    """Отрезки границы якоря между соседними t-дартами a1, a2 (без них)."""
    m = len(tdarts)
    if m < 2 or a1 == a2:
        return []
    out = []
    for lo, hi in ((a1, a2), (a2, a1)):
        if tdarts.index(hi) != (tdarts.index(lo) + 1) % m:
            continue
        seg, x = [], d.phi(lo)
        while x != hi:
            seg.append(x)
            x = d.phi(x)
        out.append(seg)
    return out


def _region_clean(
    d: Diagram,
    kinds: Dict[int, str],
    start: Sequence[int],
    stop: Set[int],
    blocking: Set[int],
) -> bool:
    """Область, видимая через дарты start, состоит только из клеток mu_H."""
    face_of = d.face_of
    queue = [face_of[d.reverse[x]] for x in start]
    seen: Set[int] = set()
    while queue:
        f = queue.pop()
        if f in stop or f in seen:
            continue
        if kinds[f] in (R_CELL, BOUNDARY) or f in blocking:
            return False
        seen.add(f)
        queue.extend(face_of[d.reverse[x]] for x in d.face_darts(d.face(f)))
    return True


def _consecutive(d, kinds, tdarts, bands, i, j, band_cells) -> bool:
    (A, a1), (C, c1) = bands[i].ends
    for (A2, a2), (C2, c2) in (bands[j].ends, bands[j].ends[::-1]):
        if (A2, C2) != (A, C):
            continue
        stop = {A, C} | set(bands[i].cells) | set(bands[j].cells)
        blocking = band_cells - stop
        for ga in _gaps(d, tdarts[A], a1, a2):
            for gc in _gaps(d, tdarts[C], c1, c2):
                if _region_clean(d, kinds, ga + gc, stop, blocking):
                    return True
    return False


def group_cables(
    d: Diagram,
    p: Presentation,
    bands: Sequence[TBand],
    h_relators: Optional[Iterable[int]] = None,
) -> List[TCable]:
    kinds = classify(d, p, h_relators)
    tdarts = {fid: t_darts(d, fid) for fid, k in kinds.items() if k in (R_CELL, BOUNDARY)}
    open_bands = [k for k, b in enumerate(bands) if not b.is_ring]
    band_cells = {c for k in open_bands for c in bands[k].cells}

    g = nx.Graph()
    g.add_nodes_from(open_bands)
    for x, i in enumerate(open_bands):
        for j in open_bands[x + 1:]:
            if _consecutive(d, kinds, tdarts, bands, i, j, band_cells):
                g.add_edge(i, j)

    cables = []
    for comp in sorted(nx.connected_components(g), key=min):
        first = bands[min(comp)]
        A = first.ends[0][0]
        ordered = sorted(comp, key=lambda k: _position_on(d, bands[k], A))
        near, far = [], []
        C = None
        for k in ordered:
            (fa, da), (fc, dc) = bands[k].ends
            if fa != A or (C is not None and fc != C):
                (fa, da), (fc, dc) = (fc, dc), (fa, da)
            C = fc
            near.append(da)
            far.append(dc)
        cables.append(TCable(tuple(ordered), ((A, tuple(near)), (C, tuple(far)))))
    logger.debug(f"group_cables: {len(open_bands)} bands -> {len(cables)} cables")
    return cables


def _position_on(d: Diagram, band: TBand, face_id: int) -> int:
    for f, x in band.ends:
        if f == face_id:
            return d.position[x]
    return 0


def single_band_cables(bands: Sequence[TBand]) -> List[TCable]:
    """Каждая незамкнутая полоса - отдельный кабель (без максимальности)."""
    return [
        TCable((k,), ((b.ends[0][0], (b.ends[0][1],)), (b.ends[1][0], (b.ends[1][1],))))
        for k, b in enumerate(bands) if not b.is_ring
    ]
