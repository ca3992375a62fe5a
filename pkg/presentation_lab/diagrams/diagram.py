"""presentation_lab.diagrams.diagram

Диаграмма ван Кампена как комбинаторная карта.

  reverse  alpha: дарт -> обратный дарт (инволюция без неподвижных точек)
  next     sigma: следующий дарт против часовой стрелки вокруг вершины
  faces    орбиты phi = sigma . alpha; ровно одна грань `boundary`

Метка клетки, прочитанная от dart0 по phi, равна повороту r^{sign}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx

from entities.errors import ShapeError
from entities.presentation import Presentation
from entities.word import Letter, RawWord, invert_letters

logger = logging.getLogger(__name__)

CELL     = "cell"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class Face:
    id:       int
    kind:     str                   # cell | boundary
    relator:  Optional[int] = None
    rotation: Optional[int] = None
    sign:     Optional[int] = None
    dart0:    Optional[int] = None


def relator_rotation(p: Presentation, idx: int, rotation: int, sign: int) -> RawWord:
    r = p.relators[idx]
    if sign < 0:
        r = invert_letters(r)
    if not r:
        return r
    k = rotation % len(r)
    return r[k:] + r[:k]


@dataclass(frozen=True)
class Diagram:
    reverse: Tuple[int, ...]    = ()
    next:    Tuple[int, ...]    = ()
    labels:  Tuple[Letter, ...] = ()
    faces:   Tuple[Face, ...]   = (Face(0, BOUNDARY),)

    @property
    def size(self) -> int:
        return len(self.reverse)

    def phi(self, d: int) -> int:
        return self.next[self.reverse[d]]

    def face_darts(self, face: Face) -> List[int]:
        if face.dart0 is None:
            return []
        out, d = [], face.dart0
        while True:
            out.append(d)
            d = self.phi(d)
            if d == face.dart0 or len(out) > self.size:
                return out

    def face_letters(self, face: Face) -> RawWord:
        return tuple(self.labels[d] for d in self.face_darts(face))

    @cached_property
    def face_of(self) -> Dict[int, int]:
        out = {}
        for f in self.faces:
            for d in self.face_darts(f):
                out[d] = f.id
        return out

    @cached_property
    def position(self) -> Dict[int, int]:
        """Номер дарта в обходе его грани от dart0."""
        out = {}
        for f in self.faces:
            for k, d in enumerate(self.face_darts(f)):
                out[d] = k
        return out

    def face(self, fid: int) -> Face:
        for f in self.faces:
            if f.id == fid:
                return f
        raise KeyError(fid)

    @property
    def cells(self) -> List[Face]:
        return [f for f in self.faces if f.kind == CELL]

    @property
    def boundary_faces(self) -> List[Face]:
        return [f for f in self.faces if f.kind == BOUNDARY]

    @cached_property
    def vertex_of(self) -> Dict[int, int]:
        """Дарт -> номер вершины (орбита sigma), вершина - начало дарта."""
        out: Dict[int, int] = {}
        v = 0
        for start in range(self.size):
            if start in out:
                continue
            d = start
            while d not in out:
                out[d] = v
                d = self.next[d]
            v += 1
        return out

    @property
    def n_vertices(self) -> int:
        return len(set(self.vertex_of.values())) if self.size else 1

    @property
    def n_edges(self) -> int:
        return self.size // 2

    def euler(self) -> int:
        return self.n_vertices - self.n_edges + len(self.faces)

    def area(self) -> int:
        return len(self.cells)


# ── Проверка ─────────────────────────────────────────────────────────

@dataclass
class ValidationReport:
    valid:      bool = True
    violations: List[str] = field(default_factory=list)
    vertices:   int = 0
    edges:      int = 0
    faces:      int = 0

    def fail(self, message: str) -> None:
        self.valid = False
        self.violations.append(message)


def validate(d: Diagram, p: Presentation) -> ValidationReport:
    rep = ValidationReport()
    n = d.size
    if len(d.next) != n or len(d.labels) != n:
        rep.fail(f"tables differ in length: reverse {n}, next {len(d.next)}, labels {len(d.labels)}")
        return rep

    for k in range(n):
        a = d.reverse[k]
        if not 0 <= a < n or a == k or d.reverse[a] != k:
            rep.fail(f"dart {k}: reverse {a} is not a fixed-point-free involution")
        elif d.labels[a] != d.labels[k].inverse():
            rep.fail(f"dart {k}: label {d.labels[k]} but reverse carries {d.labels[a]}")
    if sorted(d.next) != list(range(n)):
        rep.fail("next is not a permutation of the darts")
    if not rep.valid:
        return rep

    # грани покрывают дарты ровно по одному разу
    seen: Dict[int, int] = {}
    for f in d.faces:
        if f.dart0 is None:
            if n:
                rep.fail(f"face {f.id}: no dart0 in a non-empty diagram")
            continue
        if not 0 <= f.dart0 < n:
            rep.fail(f"face {f.id}: dart0 {f.dart0} out of range")
            continue
        for x in d.face_darts(f):
            if x in seen:
                rep.fail(f"dart {x} lies on faces {seen[x]} and {f.id}")
            seen[x] = f.id
    if n and len(seen) != n:
        missing = sorted(set(range(n)) - set(seen))
        rep.fail(f"darts {missing[:8]} lie on no listed face")

    boundaries = d.boundary_faces
    if len(boundaries) != 1:
        rep.fail(f"expected exactly one boundary face, got {len(boundaries)}")

    for f in d.cells:
        if f.relator is None or not 0 <= f.relator < len(p.relators):
            rep.fail(f"face {f.id}: relator index {f.relator} out of range")
            continue
        if f.sign not in (1, -1):
            rep.fail(f"face {f.id}: sign must be +1 or -1")
            continue
        expected = relator_rotation(p, f.relator, f.rotation or 0, f.sign)
        got = d.face_letters(f)
        if got != expected:
            rep.fail(f"face {f.id}: reads {''.join(map(str, got))}, "
                     f"relator {f.relator} rotation {f.rotation} sign {f.sign:+d} "
                     f"reads {''.join(map(str, expected))}")

    if n:
        g = nx.Graph()
        g.add_nodes_from(set(d.vertex_of.values()))
        for k in range(n):
            g.add_edge(d.vertex_of[k], d.vertex_of[d.reverse[k]])
        if not nx.is_connected(g):
            rep.fail("1-skeleton is not connected")

    rep.vertices, rep.edges, rep.faces = d.n_vertices, d.n_edges, len(d.faces)
    if rep.valid and d.euler() != 2:
        rep.fail(f"Euler count V-E+F = {d.euler()}, a disc diagram gives 2")
    logger.debug(f"validate: V={rep.vertices} E={rep.edges} F={rep.faces}, {len(rep.violations)} violations")
    return rep


def boundary_word(d: Diagram) -> RawWord:
    """Граничное слово без свободных сокращений; для одной клетки - сам релятор.

    Базовая точка - начало dart0 клетки 0, если этот дарт лежит на границе.
    """
    boundaries = d.boundary_faces
    if len(boundaries) != 1:
        raise ShapeError(f"diagram has {len(boundaries)} boundary faces")
    darts = d.face_darts(boundaries[0])
    cells = d.cells
    if cells and cells[0].dart0 is not None:
        anchor = d.reverse[cells[0].dart0]
        if anchor in darts:
            k = darts.index(anchor) + 1
            darts = darts[k:] + darts[:k]
    return invert_letters(tuple(d.labels[x] for x in darts))


# ── Сборка ───────────────────────────────────────────────────────────

class DiagramBuilder:
    """Клетки-многоугольники, склейка сторон; незаклеенные стороны
    замыкаются в граничную грань веер за веером."""

    def __init__(self, p: Presentation):
        self.p = p
        self._cells: List[Tuple[int, int, int, RawWord]] = []
        self._glue: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def add_cell(self, relator: int, rotation: int = 0, sign: int = 1) -> int:
        if not 0 <= relator < len(self.p.relators):
            raise ShapeError(f"relator index {relator} out of range")
        letters = relator_rotation(self.p, relator, rotation, sign)
        if not letters:
            raise ShapeError(f"relator {relator} is empty")
        self._cells.append((relator, rotation, sign, letters))
        return len(self._cells) - 1

    def glue(self, f: int, i: int, g: int, j: int) -> DiagramBuilder:
        a, b = (f, i), (g, j)
        for side in (a, b):
            face, k = side
            if not 0 <= face < len(self._cells) or not 0 <= k < len(self._cells[face][3]):
                raise ShapeError(f"no side {k} on cell {face}")
            if side in self._glue:
                raise ShapeError(f"side {k} of cell {face} is already glued")
        if a == b:
            raise ShapeError(f"cannot glue side {i} of cell {f} to itself")
        la, lb = self._cells[f][3][i], self._cells[g][3][j]
        if la != lb.inverse():
            raise ShapeError(f"sides carry {la} and {lb}, not inverse letters")
        self._glue[a] = b
        self._glue[b] = a
        return self

    def build(self) -> Diagram:
        if not self._cells:
            return Diagram()
        first: List[int] = []
        labels: List[Letter] = []
        phi: Dict[int, int] = {}
        phi_inv: Dict[int, int] = {}
        for _, _, _, letters in self._cells:
            base = len(labels)
            first.append(base)
            labels.extend(letters)
            for k in range(len(letters)):
                d, e = base + k, base + (k + 1) % len(letters)
                phi[d] = e
                phi_inv[e] = d
        n_cell = len(labels)
        reverse: Dict[int, int] = {}
        for (f, i), (g, j) in self._glue.items():
            reverse[first[f] + i] = first[g] + j

        boundary: List[int] = []
        for d in range(n_cell):
            if d not in reverse:
                b = len(labels)
                labels.append(labels[d].inverse())
                reverse[d], reverse[b] = b, d
                boundary.append(b)

        # phi(b) = первый граничный дарт, выходящий из той же вершины
        for b in boundary:
            x = reverse[b]
            while True:
                y = reverse[phi_inv[x]]
                if y >= n_cell:
                    break
                x = y
            phi[b] = y

        n = len(labels)
        nxt = tuple(phi[reverse[d]] for d in range(n))
        faces = [
            Face(k, CELL, relator, rotation, sign, first[k])
            for k, (relator, rotation, sign, _) in enumerate(self._cells)
        ]
        seen = set()
        for b in boundary:
            if b in seen:
                continue
            x = b
            while x not in seen:
                seen.add(x)
                x = phi[x]
            faces.append(Face(len(faces), BOUNDARY, dart0=b))
        d = Diagram(tuple(reverse[k] for k in range(n)), nxt, tuple(labels), tuple(faces))
        logger.debug(f"built diagram: {len(self._cells)} cells, {n} darts, "
                     f"{len(faces) - len(self._cells)} boundary faces")
        return d
