"""presentation_lab.diagrams.dual

Двойственный граф: вершины - r-клетки, рёбра - t-кабели (или отдельные
полосы при maximal=False). Порядок концов кабелей вокруг r-клетки берётся
из обхода её границы, поэтому грани двойственного графа считаются по
системе вращений, без геометрии.

Для внутренней компоненты V - E + F = 1 (F - ограниченные грани). Если
все грани имеют >= 3 рёбер и все степени >= 6, то 1 <= V - E/3 <= 0.
Аудит только считает; несуществования диаграммы он не утверждает.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from diagrams.bands import (
    R_CELL, TCable, classify, group_cables, single_band_cables, t_darts, trace_bands,
)
from diagrams.diagram import BOUNDARY, Diagram, boundary_word
from entities.errors import ShapeError
from entities.presentation import Presentation
from entities.word import STABLE

logger = logging.getLogger(__name__)

HalfEdge = Tuple[int, int]      # (номер кабеля, конец 0/1)


@dataclass
class DualFace:
    half_edges: Tuple[HalfEdge, ...]
    outer:      bool     = False
    touches:    Set[int] = field(default_factory=set)   # r-клетки внутри области

    @property
    def size(self) -> int:
        return len(self.half_edges)


@dataclass
class DualGraph:
    graph:    nx.MultiGraph
    cables:   List[TCable]
    rotation: Dict[int, List[HalfEdge]]
    faces:    List[DualFace]

    @property
    def V(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def E(self) -> int:
        return self.graph.number_of_edges()


@dataclass
class ComponentAudit:
    cells:       Tuple[int, ...]
    V:           int
    E:           int
    F:           int                    # ограниченные грани
    face_sizes:  Tuple[int, ...]
    min_face:    Optional[int]
    min_degree:  int
    innermost:   bool
    violations:  List[str] = field(default_factory=list)

    @property
    def euler(self) -> int:
        return self.V - self.E + self.F

    @property
    def v_minus_e3(self) -> Fraction:
        return Fraction(self.V) - Fraction(self.E, 3)

    @property
    def chain_fires(self) -> bool:
        """1 = V-E+F <= V-E/3 <= 0: при гранях >= 3 и степенях >= 6."""
        faces_ok = self.min_face is None or self.min_face >= 3
        return self.innermost and faces_ok and self.min_degree >= 6


@dataclass
class AuditReport:
    components: List[ComponentAudit]
    dual:       DualGraph
    maximal:    bool = True

    @property
    def vacuous(self) -> bool:
        return not self.components


# ── Построение ───────────────────────────────────────────────────────

class _Runs:
    """Отрезок t-дартов конца кабеля на якоре: (первый, последний) по обходу."""

    def __init__(self, d: Diagram, cables: List[TCable]):
        self.d = d
        self.tlist: Dict[int, List[int]] = {}
        self.run: Dict[HalfEdge, Tuple[int, int]] = {}
        self.cell: Dict[HalfEdge, int] = {}
        for e, cable in enumerate(cables):
            for end, (face, darts) in enumerate(cable.ends):
                if face not in self.tlist:
                    self.tlist[face] = t_darts(d, face)
                self.run[(e, end)] = self._bounds(self.tlist[face], set(darts))
                self.cell[(e, end)] = face

    @staticmethod
    def _bounds(tl: List[int], darts: Set[int]) -> Tuple[int, int]:
        m = len(tl)
        if len(darts) == m:
            return tl[0], tl[-1]
        first = next(x for k, x in enumerate(tl) if x in darts and tl[k - 1] not in darts)
        last = next(x for k, x in enumerate(tl) if x in darts and tl[(k + 1) % m] not in darts)
        return first, last

    def corner(self, arrive: HalfEdge, leave: HalfEdge) -> List[int]:
        """Дарты якоря строго между концом arrive и началом leave."""
        d = self.d
        x, stop = d.phi(self.run[arrive][1]), self.run[leave][0]
        out = []
        while x != stop:
            out.append(x)
            x = d.phi(x)
        return out


def _flood(d: Diagram, kinds: Dict[int, str], start: List[int], walls: Set[int]) -> Tuple[Set[int], bool]:
    """Грани области за дартами start: (r-клетки на краю, есть ли граница)."""
    face_of = d.face_of
    queue = [face_of[d.reverse[x]] for x in start]
    seen: Set[int] = set()
    touches: Set[int] = set()
    outer = False
    while queue:
        f = queue.pop()
        if f in seen:
            continue
        seen.add(f)
        if kinds[f] == BOUNDARY:
            outer = True
            continue
        if kinds[f] == R_CELL:
            touches.add(f)
            continue
        if f in walls:
            continue
        queue.extend(face_of[d.reverse[x]] for x in d.face_darts(d.face(f)))
    return touches, outer


def build_dual(
    d: Diagram,
    p: Presentation,
    maximal: bool = True,
    h_relators: Optional[Iterable[int]] = None,
) -> DualGraph:
    kinds = classify(d, p, h_relators)
    bands = trace_bands(d, p, h_relators)
    all_cables = group_cables(d, p, bands, h_relators) if maximal else single_band_cables(bands)
    cables = [c for c in all_cables if all(kinds[f] == R_CELL for f in c.faces)]

    g = nx.MultiGraph()
    g.add_nodes_from(sorted(f for f, k in kinds.items() if k == R_CELL))
    for e, c in enumerate(cables):
        a, b = c.faces
        g.add_edge(a, b, key=e, bands=len(c.bands))

    runs = _Runs(d, cables)
    rotation: Dict[int, List[HalfEdge]] = {}
    for h, cell in runs.cell.items():
        rotation.setdefault(cell, []).append(h)
    for cell, hs in rotation.items():
        hs.sort(key=lambda h: d.position[runs.run[h][0]])

    def sigma(h: HalfEdge) -> HalfEdge:
        hs = rotation[runs.cell[h]]
        return hs[(hs.index(h) + 1) % len(hs)]

    walls = {c for cable in cables for k in cable.bands for c in bands[k].cells}
    faces: List[DualFace] = []
    seen: Set[HalfEdge] = set()
    for start in sorted(runs.cell):
        if start in seen:
            continue
        orbit, corners = [], []
        h = start
        while h not in seen:
            seen.add(h)
            orbit.append(h)
            arrive = (h[0], 1 - h[1])
            nxt = sigma(arrive)
            corners.extend(runs.corner(arrive, nxt))
            h = nxt
        touches, outer = _flood(d, kinds, corners, walls)
        faces.append(DualFace(tuple(orbit), outer, touches))
    logger.debug(f"dual: V={g.number_of_nodes()} E={g.number_of_edges()} faces={len(faces)}")
    return DualGraph(g, cables, rotation, faces)


# ── Аудит ────────────────────────────────────────────────────────────

def euler_audit(
    d: Diagram,
    p: Presentation,
    maximal: bool = True,
    h_relators: Optional[Iterable[int]] = None,
) -> AuditReport:
    if any(l.generator == STABLE for l in boundary_word(d)):
        raise ShapeError("euler_audit needs a boundary word without t-letters")
    dual = build_dual(d, p, maximal, h_relators)
    components = []
    for comp in sorted(nx.connected_components(dual.graph), key=min):
        comp = set(comp)
        faces = [f for f in dual.faces if dual.cables[f.half_edges[0][0]].faces[0] in comp]
        outer = _pick_outer(faces, comp)
        inner = [f for f in faces if f is not outer]
        sub = dual.graph.subgraph(comp)
        sizes = tuple(sorted(f.size for f in inner))
        audit = ComponentAudit(
            cells=tuple(sorted(comp)),
            V=sub.number_of_nodes(),
            E=sub.number_of_edges(),
            F=len(inner),
            face_sizes=sizes,
            min_face=min(sizes) if sizes else None,
            min_degree=min(deg for _, deg in sub.degree()),
            innermost=not any(f.touches - comp for f in inner),
        )
        if 1 in sizes:
            audit.violations.append("face with 1 edge: a t-cable with both ends on the same r-cell")
        if 2 in sizes:
            audit.violations.append("face with 2 edges: two t-cables bound a region, cables not maximal")
        if audit.euler != 1:
            audit.violations.append(f"V-E+F = {audit.euler}, expected 1")
        components.append(audit)
    logger.debug(f"euler_audit: {len(components)} components, maximal={maximal}")
    return AuditReport(components, dual, maximal)


def _pick_outer(faces: List[DualFace], comp: Set[int]) -> Optional[DualFace]:
    if not faces:
        return None
    for f in faces:
        if f.outer:
            return f
    for f in faces:
        if f.touches - comp:
            return f
    return max(faces, key=lambda f: f.size)


def to_dot(dual: DualGraph, name: str = "dual") -> str:
    lines = [f"graph {name} {{"]
    for v in dual.graph.nodes:
        lines.append(f"  c{v};")
    for a, b, key, data in dual.graph.edges(keys=True, data=True):
        lines.append(f'  c{a} -- c{b} [label="{data.get("bands", 1)}"];')
    lines.append("}")
    return "\n".join(lines)
