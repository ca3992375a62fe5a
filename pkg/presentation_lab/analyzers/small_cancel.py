"""presentation_lab.analyzers.small_cancel

Симметризованные множества, N-куски и проверка C'(lambda, N) над G.

Член множества - циклическая последовательность пар (d_i, g_i):
    t^{d_1} g_1 t^{d_2} g_2 ... t^{d_M} g_M
(g_M уже слит с g_0). Кусок - общий префикс p двух членов r, r' с M >= L
буквами t, для которого существует t-кабель: полосы длины < N соединяют
соответствующие буквы t, а между соседними полосами - диск базовой группы.

Метки полос. Перед буквой t^{+1} метка лежит в A = <x>, после неё - в
B = <y> (t^-1 x^j t = y^j); перед t^{-1} - в B, после - в A. Если после
буквы t^{d_i} стоит метка f, то метка перед следующей буквой равна
    g_i^-1 f g'_i
и обязана лежать в подгруппе, которую требует d_{i+1}. Для g = (a, k),
g' = (a', k'):
    f = x^j:  g^-1 f g' = (2^k (j - a + a'), k' - k)
    f = y^j:  g^-1 f g' = (2^k (2^{-j} a' - a), k' + j - k)
Формулы считаются без сдвигов на j, поэтому метки порядка E_5 безопасны.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from analyzers.hnn_britton import (
    BAUMSLAG_GERSTEN,
    SYMBOLIC_GERSTEN,
    HnnSpec,
    cyclic_pinches,
    parse_sequence,
)
from config.settings import Config
from entities.errors import NotCyclicallyReducedError, ShapeError, SymbolicRangeError, fmt_int
from entities.tower import Exponent, TowerSum, collapse, exp_sign
from entities.word import Word

logger = logging.getLogger(__name__)

Pair   = Tuple[int, Any]
Member = Tuple[Pair, ...]

SIGNATURE_POWERS = (3, 5, 7)


# ── Типы ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BandLabel:
    side:     str        # "x" -> A, "y" -> B
    exponent: Exponent

    def crossed(self) -> BandLabel:
        return BandLabel("y" if self.side == "x" else "x", self.exponent)

    def __str__(self) -> str:
        return f"{self.side}^{fmt_int(self.exponent)}"


@dataclass(frozen=True)
class Origin:
    word_index: int
    inverted:   bool
    rotation:   int


@dataclass
class SymmetrizedSet:
    members: List[Member]
    origins: List[Origin]
    n:       Exponent
    spec:    HnnSpec = BAUMSLAG_GERSTEN

    def __len__(self) -> int:
        return len(self.members)

    def relator_t(self, idx: int) -> int:
        return len(self.members[idx])


@dataclass
class PieceMatch:
    r:                  int
    r_prime:            int
    start:              Optional[Origin]       = None
    start_prime:        Optional[Origin]       = None
    length_t:           int                    = 0
    initial:            Optional[BandLabel]    = None
    band_labels:        List[Exponent]         = field(default_factory=list)
    distinct_remainder: bool                   = True


@dataclass
class CPrimeCertificate:
    lam:         Fraction
    n:           Exponent
    max_piece_t: int                 = 0
    relator_t:   int                 = 0
    verdict:     bool                = True
    window:      int                 = 0
    pairs:       int                 = 0
    witness:     Optional[PieceMatch] = None
    violations:  List[PieceMatch]    = field(default_factory=list)


# ── Члены множества ──────────────────────────────────────────────────

def _cyclic_member(w: Word, spec: HnnSpec) -> Member:
    s = parse_sequence(w, spec)
    if not s.tail:
        raise ShapeError(f"relator {w} has no t letters")
    pairs = list(s.tail)
    d_last, g_last = pairs[-1]
    pairs[-1] = (d_last, g_last * s.g0)
    return tuple(pairs)


def _rotate(member: Member, p: int) -> Member:
    return member[p:] + member[:p]


def invert_member(member: Member) -> Member:
    """(t^{d_1} g_1 ... t^{d_M} g_M)^-1 как циклическая последовательность."""
    size = len(member)
    return tuple(
        (-member[size - 1 - j][0], member[(size - 2 - j) % size][1].inverse())
        for j in range(size)
    )


def _contains(members: Sequence[Member], candidate: Member) -> bool:
    return any(m == candidate for m in members)


def symmetrize(words: Sequence[Word], n: Exponent, spec: HnnSpec = BAUMSLAG_GERSTEN) -> SymmetrizedSet:
    members: List[Member] = []
    origins: List[Origin] = []
    for idx, w in enumerate(words):
        s = parse_sequence(w, spec)
        for pinch in cyclic_pinches(s, spec):
            if pinch.cost < n:
                raise NotCyclicallyReducedError(idx, pinch.position, pinch.cost, n)
        base = _cyclic_member(w, spec)
        for inverted, member in ((False, base), (True, invert_member(base))):
            for p in range(len(member)):
                rotated = _rotate(member, p)
                if not _contains(members, rotated):
                    members.append(rotated)
                    origins.append(Origin(idx, inverted, p))
    logger.debug(f"symmetrize: {len(words)} words -> {len(members)} members, N={fmt_int(n)}")
    return SymmetrizedSet(members, origins, n, spec)


# ── Распространение меток ────────────────────────────────────────────

def _to_exponent(value) -> Exponent:
    if isinstance(value, TowerSum):
        return collapse(value)
    return value.to_int()


def _k_zero(value: Exponent) -> bool:
    return exp_sign(collapse(value)) == 0


def propagate_band(g: Any, g_prime: Any, label: BandLabel, side: str) -> Optional[Exponent]:
    """Показатель j с g^-1 * label * g' = side^j, либо None."""
    a, k = g.a, g.k
    a2, k2 = g_prime.a, g_prime.k
    j = label.exponent
    try:
        if label.side == "x":
            core = a2 - a + j
            if side == "y":
                return collapse(k2 - k) if core.sign() == 0 else None
            if not _k_zero(k2 - k):
                return None
            value = core.times_pow2(k)
            return _to_exponent(value) if value.is_integer() else None

        if side == "y":
            if not a2.eq_times_pow2(a, j):
                return None
            return collapse(k2 + j - k)
        if not _k_zero(k2 + j - k):
            return None
        value = a2.times_pow2(k2) - a.times_pow2(k)
        return _to_exponent(value) if value.is_integer() else None
    except SymbolicRangeError:
        # вне класса сумм башен: m/k = 2^{+-E} для малых нечётных m невозможно
        return None


def _side_before(d: int) -> str:
    return "x" if d > 0 else "y"


def _eq_label_times(g: Any, label: BandLabel, h: Any) -> bool:
    """g == label * h без сдвига на показатель метки."""
    j = label.exponent
    try:
        if label.side == "x":
            return (g.a - h.a - j).sign() == 0 and _k_zero(g.k - h.k)
        return _k_zero(g.k - h.k - j) and g.a.eq_times_pow2(h.a, -j)
    except SymbolicRangeError:
        return False


def _elements_equal(g: Any, h: Any) -> bool:
    return (g.a - h.a).sign() == 0 and _k_zero(g.k - h.k)


def _label_element(spec: HnnSpec, label: BandLabel):
    return spec.phi_inv(label.exponent) if label.side == "x" else spec.phi(label.exponent)


def _remainder_matches(
    r: Member, r2: Member, length: int, f_last: BandLabel, v1: BandLabel, spec: HnnSpec,
) -> bool:
    """b == f_L * b' * v_1^-1 как последовательности (условие (5) нарушено)."""
    size = len(r)
    if len(r2) != size:
        return False
    if any(r[i][0] != r2[i][0] for i in range(length, size)):
        return False
    v1_inv = _label_element(spec, BandLabel(v1.side, -v1.exponent))
    if length == size:
        return _eq_label_times(r[-1][1], f_last, r2[-1][1] * v1_inv)
    if not _eq_label_times(r[length - 1][1], f_last, r2[length - 1][1]):
        return False
    for i in range(length, size - 1):
        if not _elements_equal(r[i][1], r2[i][1]):
            return False
    return _elements_equal(r[-1][1], r2[-1][1] * v1_inv)


def _walk(
    r: Member, r2: Member, v1: BandLabel, n: Exponent, spec: HnnSpec,
) -> Tuple[int, List[Exponent]]:
    """Самый длинный префикс, удовлетворяющий условиям (5) и |метка| < N."""
    best, best_labels = 0, []
    labels: List[Exponent] = []
    entering = v1
    limit = min(len(r), len(r2))
    for step in range(limit):
        d, d2 = r[step][0], r2[step][0]
        if d != d2 or entering.side != _side_before(d) or not abs(entering.exponent) < n:
            break
        labels.append(entering.exponent)
        after = entering.crossed()
        length = step + 1
        if not _remainder_matches(r, r2, length, after, v1, spec):
            best, best_labels = length, list(labels)
        if length == limit:
            break
        nxt = r[step + 1][0]
        j = propagate_band(r[step][1], r2[step][1], after, _side_before(nxt))
        if j is None:
            break
        entering = BandLabel(_side_before(nxt), j)
    return best, best_labels


def max_piece(R: SymmetrizedSet, r_idx: int, r2_idx: int, window: Optional[int] = None) -> PieceMatch:
    window = Config.BAND_WINDOW if window is None else window
    r, r2 = R.members[r_idx], R.members[r2_idx]
    match = PieceMatch(r_idx, r2_idx, R.origins[r_idx], R.origins[r2_idx])
    if r[0][0] != r2[0][0]:
        return match
    side = _side_before(r[0][0])
    for m in sorted(range(-window, window + 1), key=lambda v: (abs(v), v)):
        if not abs(m) < R.n:
            continue
        v1 = BandLabel(side, m)
        length, labels = _walk(r, r2, v1, R.n, R.spec)
        if length > match.length_t:
            match.length_t = length
            match.initial = v1
            match.band_labels = labels
    return match


def verify_c_prime(R: SymmetrizedSet, lam: Fraction, n: Optional[Exponent] = None,
                   window: Optional[int] = None) -> CPrimeCertificate:
    lam = Fraction(lam)
    window = Config.BAND_WINDOW if window is None else window
    if n is not None and n != R.n:
        R = SymmetrizedSet(R.members, R.origins, n, R.spec)
    cert = CPrimeCertificate(lam=lam, n=R.n, window=window)
    if not R.members:
        return cert
    cert.relator_t = min(len(m) for m in R.members)
    for i in range(len(R)):
        for j in range(len(R)):
            cert.pairs += 1
            match = max_piece(R, i, j, window)
            if match.length_t == 0:
                continue
            if match.length_t > cert.max_piece_t:
                cert.max_piece_t = match.length_t
                cert.witness = match
            if not match.length_t < lam * R.relator_t(i):
                cert.violations.append(match)
    cert.verdict = not cert.violations
    logger.debug(
        f"C'({lam}, {fmt_int(R.n)}): {cert.pairs} pairs, max piece {cert.max_piece_t}, "
        f"relator_t {cert.relator_t}, verdict {cert.verdict}"
    )
    return cert


# ── Семейство R_n ────────────────────────────────────────────────────

def family_relator(n: int, symbolic: bool = False) -> Word:
    """t^-1 u_{n,1}."""
    from models.relator_factory import make_u
    return Word.power("t", -1) * make_u(n, 1, symbolic=symbolic).word


def family_symmetrized_set(n: int, symbolic: bool = False) -> SymmetrizedSet:
    from models.relator_factory import tower
    spec = SYMBOLIC_GERSTEN if symbolic else BAUMSLAG_GERSTEN
    big_n = collapse(TowerSum.tower(n)) if symbolic else tower(n)
    return symmetrize([family_relator(n, symbolic)], big_n, spec)


def hand_gap_table(n: int, symbolic: bool = False) -> List[Tuple[str, str, int]]:
    """Число букв t между соседними сигнатурными блоками x^{+-3,5,7} по циклу."""
    spec = SYMBOLIC_GERSTEN if symbolic else BAUMSLAG_GERSTEN
    member = _cyclic_member(family_relator(n, symbolic), spec)
    marks = []
    for pos, (_, g) in enumerate(member):
        i = spec.in_a(g)
        if i is not None and not isinstance(i, TowerSum) and abs(i) in SIGNATURE_POWERS:
            marks.append((pos, f"x^{i}"))
    rows = []
    size = len(member)
    for idx, (pos, name) in enumerate(marks):
        nxt_pos, nxt_name = marks[(idx + 1) % len(marks)]
        rows.append((name, nxt_name, (nxt_pos - pos) % size))
    return rows
