"""presentation_lab.analyzers.area_oracle

Точная площадь коротких тривиальных слов перебором и проверка
сертификатов w = prod g_i r_i^{+-1} g_i^-1 (равенство в свободной группе).

Поиск. Состояние - циклически приведённое слово с точностью до поворота
и обращения. Ход: циклическое подслово u (|u| >= 1), совпадающее с
префиксом сопряжённого rho = u s соотношения r^{+-1}, заменяется на s^-1,
затем слово циклически сокращается. В любой диаграмме есть клетка с
ребром на границе, поэтому такие ходы дают точную площадь.

A* с допустимой эвристикой: замена меняет сумму показателей sigma_g не
больше чем на max |sigma_g(r)|, свободное сокращение её не меняет.
Длина и число вхождений букв допустимыми оценками НЕ являются:
z r z^-1 имеет площадь 1.
"""

from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import Config
from entities.errors import ShapeError
from entities.presentation import Presentation
from entities.word import Word, free_reduce

logger = logging.getLogger(__name__)

FOUND          = "found"
OVER_AREA      = "exceeds area bound"
OVER_LENGTH    = "exceeds length bound"
OVER_NODES     = "exceeds node limit"
OVER_TIME      = "exceeds time limit"

Code = Tuple[int, ...]


# ── Типы ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class AreaCertificate:
    word:  Word
    terms: Tuple[Tuple[Word, int, int], ...] = ()   # (conjugator, relator, sign)

    @property
    def size(self) -> int:
        return len(self.terms)


@dataclass
class AreaQuery:
    word:         Word
    presentation: Presentation
    max_area:     int = Config.AREA_MAX
    max_len:      int = Config.AREA_MAX_LEN
    node_limit:   int = Config.AREA_NODE_LIMIT
    time_limit:   Optional[float] = None      # секунды; None - Config.AREA_TIME_LIMIT, 0 - без лимита

    def __post_init__(self):
        if self.max_area < 0 or self.max_len <= 0 or self.node_limit <= 0:
            raise ShapeError("area bounds must be positive")
        if self.time_limit is not None and self.time_limit < 0:
            raise ShapeError("time limit must be >= 0")


@dataclass
class AreaReport:
    status:      str
    area:        Optional[int] = None
    exact:       bool          = False
    lower_bound: int           = 0
    upper_bound: Optional[int] = None
    expanded:    int           = 0
    pruned_len:  int           = 0
    heuristic0:  int           = 0
    notes:       List[str]     = field(default_factory=list)

    def __str__(self) -> str:
        if self.status == FOUND:
            tail = "" if self.exact else " (length bound hit, upper bound only)"
            return f"found {self.area}{tail}"
        return self.status


# ── Кодирование ──────────────────────────────────────────────────────

class _Codec:
    def __init__(self, generators: Sequence[str]):
        self.index = {g: k + 1 for k, g in enumerate(generators)}

    def encode(self, w: Word) -> Code:
        out = []
        for l in w.letters():
            if l.generator not in self.index:
                raise ShapeError(f"letter {l} outside presentation generators")
            out.append(self.index[l.generator] * l.sign)
        return tuple(out)


def _inverse(w: Code) -> Code:
    return tuple(-c for c in reversed(w))


def _reduce(w: Sequence[int]) -> Code:
    stack: List[int] = []
    for c in w:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
        lo += 1
        hi -= 1
    return tuple(stack[lo:hi])


def _canonical(w: Code) -> Code:
    if not w:
        return w
    best = w
    for cand in (w, _inverse(w)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if rot < best:
                best = rot
    return best


def _conjugates(relators: Sequence[Code]) -> Dict[int, List[Code]]:
    """Все повороты r^{+-1}, сгруппированные по первой букве."""
    seen = set()
    by_first: Dict[int, List[Code]] = {}
    for r in relators:
        r = _reduce(r)
        if not r:
            continue
        for base in (r, _inverse(r)):
            for i in range(len(base)):
                rho = base[i:] + base[:i]
                if rho not in seen:
                    seen.add(rho)
                    by_first.setdefault(rho[0], []).append(rho)
    return by_first


class _Heuristic:
    def __init__(self, relators: Sequence[Code], n_gens: int):
        self.max_sigma = [0] * (n_gens + 1)
        for r in relators:
            sums = [0] * (n_gens + 1)
            for c in r:
                sums[abs(c)] += 1 if c > 0 else -1
            for g in range(1, n_gens + 1):
                self.max_sigma[g] = max(self.max_sigma[g], abs(sums[g]))

    def __call__(self, w: Code) -> Optional[int]:
        """None - слово не тривиально (сумма показателей не убирается)."""
        sums = [0] * len(self.max_sigma)
        for c in w:
            sums[abs(c)] += 1 if c > 0 else -1
        best = 0
        for g in range(1, len(sums)):
            if sums[g] == 0:
                continue
            if self.max_sigma[g] == 0:
                return None
            best = max(best, -(-abs(sums[g]) // self.max_sigma[g]))
        return best


def _moves(w: Code, conj: Dict[int, List[Code]]):
    size = len(w)
    doubled = w + w
    for i in range(size):
        for rho in conj.get(w[i], ()):
            k = 1
            limit = min(len(rho), size)
            while k < limit and doubled[i + k] == rho[k]:
                k += 1
            rest = doubled[i + k:i + size]
            yield _reduce(_inverse(rho[k:]) + rest)


# ── Поиск ────────────────────────────────────────────────────────────

def area_search(q: AreaQuery) -> AreaReport:
    codec = _Codec(q.presentation.generators)
    relators = [codec.encode(free_reduce(r)) for r in q.presentation.relators]
    conj = _conjugates(relators)
    h = _Heuristic(relators, len(q.presentation.generators))

    start = _canonical(_reduce(codec.encode(q.word)))
    h0 = h(start)
    report = AreaReport(status=OVER_AREA, heuristic0=h0 or 0)
    if h0 is None:
        report.notes.append("exponent sums cannot vanish: word is not trivial")
        report.exact = True
        return report
    if not start:
        return AreaReport(status=FOUND, area=0, exact=True, heuristic0=0, upper_bound=0)

    best_g: Dict[Code, int] = {start: 0}
    heap: List[Tuple[int, int, int, Code]] = [(h0, 0, 0, start)]
    counter = 1
    min_pruned_len: Optional[int] = None
    min_pruned_area: Optional[int] = None
    limit = Config.AREA_TIME_LIMIT if q.time_limit is None else q.time_limit
    deadline = time.perf_counter() + limit if limit else None

    while heap:
        f, neg_g, _, w = heapq.heappop(heap)
        g = -neg_g
        if best_g.get(w, g + 1) < g:
            continue
        if not w:
            report.status = FOUND
            report.area = g
            report.upper_bound = g
            report.exact = min_pruned_len is None or g <= min_pruned_len
            report.lower_bound = g if report.exact else f
            logger.debug(f"area search: found {g} after {report.expanded} expansions")
            return report
        report.expanded += 1
        if report.expanded > q.node_limit:
            report.status = OVER_NODES
            report.lower_bound = f
            logger.warning(f"area search: node limit {q.node_limit} reached, area >= {f}")
            return report
        if deadline is not None and report.expanded % 256 == 0 and time.perf_counter() > deadline:
            report.status = OVER_TIME
            report.lower_bound = f
            logger.warning(f"area search: time limit {limit}s reached, area >= {f}")
            return report
        if report.expanded % 100000 == 0:
            logger.debug(f"area search: {report.expanded} expanded, f={f}, open={len(heap)}")
        for nxt in _moves(w, conj):
            hn = h(nxt)
            if hn is None:
                continue
            gn = g + 1
            fn = gn + hn
            if fn > q.max_area:
                min_pruned_area = fn if min_pruned_area is None else min(min_pruned_area, fn)
                continue
            if len(nxt) > q.max_len:
                report.pruned_len += 1
                min_pruned_len = fn if min_pruned_len is None else min(min_pruned_len, fn)
                continue
            key = _canonical(nxt)
            if best_g.get(key, gn + 1) <= gn:
                continue
            best_g[key] = gn
            heapq.heappush(heap, (fn, -gn, counter, key))
            counter += 1

    if min_pruned_len is not None:
        report.status = OVER_LENGTH
        report.lower_bound = min_pruned_len
    else:
        report.status = OVER_AREA
        report.exact = True
        report.lower_bound = q.max_area + 1
    logger.debug(f"area search: {report.status} after {report.expanded} expansions")
    return report


def min_area(q: AreaQuery) -> Optional[int]:
    report = area_search(q)
    return report.area if report.status == FOUND else None


def area_report(q: AreaQuery) -> str:
    return str(area_search(q))


# ── Сертификаты ──────────────────────────────────────────────────────

def certificate_product(c: AreaCertificate, p: Presentation) -> Word:
    acc = Word.empty()
    for conj, idx, sign in c.terms:
        if not 0 <= idx < len(p.relators) or sign not in (1, -1):
            raise ShapeError(f"bad certificate term rel={idx} sign={sign}")
        r = p.relator_word(idx)
        if sign < 0:
            r = r.inverse()
        acc = acc * conj * r * conj.inverse()
    return acc


def check_certificate(c: AreaCertificate, p: Presentation) -> bool:
    try:
        return certificate_product(c, p) == c.word
    except ShapeError as e:
        logger.warning(f"certificate rejected: {e}")
        return False


# ── w_1 ──────────────────────────────────────────────────────────────

def area_w1(max_area: Optional[int] = None, max_len: Optional[int] = None,
            node_limit: Optional[int] = None, time_limit: Optional[float] = None) -> AreaReport:
    """Area_{mu_0}(w_1): сертификат даёт верхнюю границу, A* - точное значение
    или доказанную нижнюю границу, если упёрлись в лимит узлов."""
    from models.relator_factory import make_mu0, make_w, trivialization_certificate

    mu0 = make_mu0()
    w1 = make_w(1, 1).word
    cert = trivialization_certificate("w", 1)
    upper = cert.size if check_certificate(cert, mu0) else None

    bound = max_area if max_area is not None else Config.AREA_MAX
    if upper is not None:
        bound = min(bound, upper)
    q = AreaQuery(
        w1, mu0,
        max_area=bound,
        max_len=max_len or Config.AREA_MAX_LEN,
        node_limit=node_limit or Config.AREA_NODE_LIMIT,
        time_limit=time_limit,
    )
    report = area_search(q)
    report.upper_bound = report.area if report.status == FOUND else upper
    if report.status == FOUND and report.area <= 2:
        raise AssertionError(f"Area(w_1) = {report.area} is not above E_1 = 2")
    return report
