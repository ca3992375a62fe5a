"""presentation_lab.models.relator_factory

Семейство сбалансированных копредставлений тривиальной группы.

  u_{n,0} = [y^-E x y^E, x^3] [y^-E x y^E, x^5] [y^-E x y^E, x^7],  E = E_n
  u_{n,m+1} = u_{n,m} с заменой y^{+-E_{n-m}} -> t^-1 y^-E' x^{+-1} y^E' t,
              E' = E_{n-m-1}
  u_n = u_{n,n},  a_n = t^-1 u_n
  w_{n,0} = [y^-E x y^E, x],  w_n = w_{n,n}

  mu_0 = <x, y, t | y^-1 x y x^-2, t^-1 x t y^-1>,  mu_i = mu_0 + a_i.

Коммутатор [a, b] = a b a^-1 b^-1. Блоки y^{+-E_k} с k > CONCRETE_TOWER_MAX
хранятся символьно (TowerSum), при m = n все показатели равны +-1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from config.settings import Config
from entities.errors import BudgetExceededError, ShapeError, fmt_int
from entities.presentation import Presentation
from entities.tower import Exponent, TowerSum, collapse, tower_value
from entities.word import Block, Letter, RawWord, Word, count_t, free_reduce, invert_letters, length

logger = logging.getLogger(__name__)

SIGNATURES = {"u": (3, 5, 7), "w": (1,)}

R0 = Word.from_blocks([("y", -1), ("x", 1), ("y", 1), ("x", -2)])   # y^-1 x y x^-2
R1 = Word.from_blocks([("t", -1), ("x", 1), ("t", 1), ("y", -1)])   # t^-1 x t y^-1


def tower(n: int) -> Exponent:
    """E_n: int при n <= 5, иначе символьный E_n."""
    if n < 0:
        raise ValueError(f"tower index must be >= 0, got {n}")
    if n <= Config.TOWER_EXACT_MAX:
        return tower_value(n)
    return TowerSum.tower(n)


def _tower_exp(k: int, symbolic: bool) -> Exponent:
    if symbolic or k > Config.CONCRETE_TOWER_MAX:
        return collapse(TowerSum.tower(k))
    return tower_value(k)


@dataclass(frozen=True)
class FamilyWord:
    kind: str
    n:    int
    m:    int
    word: Word

    def length(self) -> Exponent:
        return length(self.word)

    def count_t(self) -> Exponent:
        return count_t(self.word)


# ── Построение ───────────────────────────────────────────────────────

def _expand(k: int, sign: int, depth: int, symbolic: bool) -> List[Block]:
    """y^{sign*E_k}, в котором подстановка применена depth раз."""
    if depth == 0:
        return [("y", collapse(sign * TowerSum.of(_tower_exp(k, symbolic))))]
    return (
        [("t", -1)]
        + _expand(k - 1, -1, depth - 1, symbolic)
        + [("x", sign)]
        + _expand(k - 1, 1, depth - 1, symbolic)
        + [("t", 1)]
    )


def _family(kind: str, n: int, m: int, symbolic: bool) -> Word:
    if n < 0 or not 0 <= m <= n:
        raise ShapeError(f"{kind}_{{{n},{m}}}: need 0 <= m <= n")
    blocks: List[Block] = []
    for k in SIGNATURES[kind]:
        conj     = _expand(n, -1, m, symbolic) + [("x", 1)]  + _expand(n, 1, m, symbolic)
        conj_inv = _expand(n, -1, m, symbolic) + [("x", -1)] + _expand(n, 1, m, symbolic)
        blocks += conj + [("x", k)] + conj_inv + [("x", -k)]
    return Word.from_blocks(blocks)


def make_u(n: int, m: int, symbolic: bool = False) -> FamilyWord:
    return FamilyWord("u", n, m, _family("u", n, m, symbolic))


def make_w(n: int, m: int, symbolic: bool = False) -> FamilyWord:
    return FamilyWord("w", n, m, _family("w", n, m, symbolic))


def make_a(n: int) -> FamilyWord:
    if n < 1:
        raise ShapeError(f"a_n needs n >= 1, got {n}")
    u = make_u(n, n)
    return FamilyWord("a", n, n, Word.power("t", -1) * u.word)


def make_mu0() -> Presentation:
    return Presentation.from_words(("x", "y", "t"), [R0, R1])


def make_mu(i: int) -> Presentation:
    if i < 1:
        raise ShapeError(f"mu_i needs i >= 1, got {i}")
    return Presentation.from_words(("x", "y", "t"), [R0, R1, make_a(i).word])


def two_relator_presentation(i: int) -> Presentation:
    """mu_i после исключения y: <x, t | ...>."""
    from models.tietze_engine import eliminate_y
    result, _ = eliminate_y(make_mu(i))
    return result


# ── Формулы длины ────────────────────────────────────────────────────

def length_formula(kind: str, n: int, m: int) -> Tuple[Exponent, int]:
    """(l, l_t) для u_{n,m}, w_{n,m}, a_n без построения слова.

    Развёрнутый блок y^{E_k} глубины d имеет длину 2^d E_{k-d} + 3(2^d - 1)
    и 2^{d+1} - 2 букв t.
    """
    if kind == "a":
        l, lt = length_formula("u", n, n)
        return collapse(l + 1), lt + 1
    if kind not in SIGNATURES:
        raise ShapeError(f"unknown family {kind!r}")
    if not 0 <= m <= n:
        raise ShapeError(f"{kind}_{{{n},{m}}}: need 0 <= m <= n")
    block = (2 ** m) * TowerSum.of(tower(n - m)) + 3 * (2 ** m - 1)
    sigs = SIGNATURES[kind]
    blocks = 4 * len(sigs)
    l = blocks * block + 2 * len(sigs) + 2 * sum(sigs)
    lt = blocks * (2 ** (m + 1) - 2)
    return collapse(l), lt


def tower_dominates(n: int) -> bool:
    """E_n > 96 * E_{n-1}^2.

    Для n >= 2 это равносильно 2^e >= 2e + 7 с e = E_{n-2}, что верно при e >= 5.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n <= Config.TOWER_EXACT_MAX:
        return tower_value(n) > 96 * tower_value(n - 1) ** 2
    return True


# ── Стоимость конверсии ──────────────────────────────────────────────

@dataclass(frozen=True)
class ConversionCost:
    n:         int
    per_level: Tuple[Tuple[int, int], ...]    # (m, стоимость уровня)
    total:     int
    bound:     int                            # 96 * E_{n-1}

    @property
    def within_bound(self) -> bool:
        return self.total <= self.bound


def conversion_cost(n: int) -> ConversionCost:
    """Цена перевода t^-1 u_n в t^-1 u_{n,1}, уровень за уровнем изнутри.

    На уровне m (u_{n,m+1} -> u_{n,m}) сворачиваются 12 * 2^m блоков
    t^-1 y^-E' x^{+-1} y^E' t, E' = E_{n-m-1}, каждый за 2E_{n-m} - 1.
    """
    if n < 2:
        raise ShapeError(f"conversion needs n >= 2, got {n}")
    per_level = []
    for m in range(n - 1, 0, -1):
        cost = 12 * 2 ** m * (2 * tower_value(n - m) - 1)
        logger.debug(f"conversion n={n} level m={m}: {fmt_int(cost)}")
        per_level.append((m, cost))
    total = sum(c for _, c in per_level)
    return ConversionCost(n, tuple(per_level), total, 96 * tower_value(n - 1))


# ── Сертификат конверсии ─────────────────────────────────────────────

_T, _TI = Letter("t", 1), Letter("t", -1)
_Y, _YI = Letter("y", 1), Letter("y", -1)


def _find_brackets(cur: List[Letter], e: int) -> List[int]:
    """Начала t^-1 y^-e x^{+-1} y^e t."""
    out = []
    size = 2 * e + 3
    for i in range(len(cur) - size + 1):
        if cur[i] != _TI or cur[i + size - 1] != _T:
            continue
        mid = cur[i + 1 + e]
        if mid.generator != "x":
            continue
        if all(l == _YI for l in cur[i + 1:i + 1 + e]) and all(
            l == _Y for l in cur[i + 2 + e:i + size - 1]
        ):
            out.append(i)
    return out


class _Rewriter:
    """Буквенная переписка с записью членов сертификата."""

    def __init__(self, letters: RawWord, relators: List[RawWord]):
        self.cur = list(letters)
        self.relators = relators
        self.terms: List[Tuple[RawWord, int, int]] = []

    def _locate(self, rho: RawWord) -> Tuple[int, int, int]:
        for idx, rel in enumerate(self.relators):
            for sign in (1, -1):
                r = rel if sign == 1 else invert_letters(rel)
                if len(r) != len(rho):
                    continue
                for p in range(len(r)):
                    if r[p:] + r[:p] == rho:
                        return idx, sign, p
        raise ShapeError(f"{rho} is not a relator conjugate")

    def apply(self, q: int, width: int, replacement: List[Letter]) -> None:
        """cur[q:q+width] -> replacement; u v^-1 должно быть поворотом r^{+-1}."""
        u = tuple(self.cur[q:q + width])
        rho = u + invert_letters(replacement)
        idx, sign, p = self._locate(rho)
        r = self.relators[idx] if sign == 1 else invert_letters(self.relators[idx])
        conj = tuple(self.cur[:q]) + invert_letters(r[:p])
        self.terms.append((conj, idx, sign))
        self.cur[q:q + width] = replacement

    def cancel(self, q: int) -> None:
        a, b = self.cur[q], self.cur[q + 1]
        if a != b.inverse():
            raise ShapeError(f"no cancellation at {q}: {a} {b}")
        del self.cur[q:q + 2]

    def push_through(self, first: int, e: int) -> None:
        """y^-e x^s y^e (первая y^-1 в first) -> x^{s 2^e}, 2^e - 1 применений на букву x."""
        for level in range(e):
            q = first + e - 1 - level
            while q + 1 < len(self.cur) and self.cur[q + 1].generator == "x":
                x = self.cur[q + 1]
                self.apply(q, 2, [x, x, _YI])
                q += 2
            self.cancel(q)

    def collapse_bracket(self, start: int, e: int) -> None:
        # y^-1 x^s -> x^{2s} y^-1, e раз; затем t^-1 x^s -> y^s t^-1
        self.push_through(start + 1, e)
        q = start
        while self.cur[q + 1].generator == "x":
            x = self.cur[q + 1]
            self.apply(q, 2, [Letter("y", x.sign), _TI])
            q += 1
        self.cancel(q)


def conversion_certificate(n: int):
    """AreaCertificate над mu_0 для (t^-1 u_n)(t^-1 u_{n,1})^-1.

    Блоки уровня сворачиваются справа налево; число членов совпадает
    с conversion_cost(n).total.
    """
    from analyzers.area_oracle import AreaCertificate

    start_word = make_a(n).word
    target = (Word.power("t", -1) * make_u(n, 1).word).letters()
    mu0 = make_mu0()
    rw = _Rewriter(start_word.letters(), list(mu0.relators))
    for m in range(n - 1, 0, -1):
        e = tower_value(n - m - 1)
        starts = _find_brackets(rw.cur, e)
        logger.debug(f"certificate n={n} level m={m}: {len(starts)} brackets, e={fmt_int(e)}")
        for start in reversed(starts):
            rw.collapse_bracket(start, e)
    if tuple(rw.cur) != target:
        raise ShapeError("conversion did not reach t^-1 u_{n,1}")
    word = start_word * (Word.power("t", -1) * make_u(n, 1).word).inverse()
    terms = tuple((free_reduce(conj), idx, sign) for conj, idx, sign in rw.terms)
    return AreaCertificate(word, terms)


_TRIVIALIZE_MAX_BITS = 8


def _find_conjugates(cur: List[Letter], e: int) -> List[int]:
    """Начала y^-e x^{+-1} y^e вне скобок t."""
    out = []
    size = 2 * e + 1
    for i in range(len(cur) - size + 1):
        if cur[i + e].generator != "x":
            continue
        if all(l == _YI for l in cur[i:i + e]) and all(l == _Y for l in cur[i + e + 1:i + size]):
            out.append(i)
    return out


def trivialization_certificate(kind: str, n: int):
    """AreaCertificate над mu_0 для u_n или w_n целиком.

    Все уровни сворачиваются до u_{n,0}, затем y^-E x^{+-1} y^E -> x^{+-2^E},
    и коммутаторы степеней x сокращаются свободно. Для w_1 это 12 + 6 = 18.
    """
    from analyzers.area_oracle import AreaCertificate

    if kind not in SIGNATURES or n < 1:
        raise ShapeError(f"no trivialization for {kind}_{n}")
    if n > Config.TOWER_EXACT_MAX or tower_value(n) > _TRIVIALIZE_MAX_BITS:
        raise BudgetExceededError(f"2^{tower(n)}", _TRIVIALIZE_MAX_BITS, what=f"x^(2^E_{n}) blocks")
    start_word = _family(kind, n, n, symbolic=False)
    rw = _Rewriter(start_word.letters(), list(make_mu0().relators))
    for m in range(n - 1, -1, -1):
        e = tower_value(n - m - 1)
        for start in reversed(_find_brackets(rw.cur, e)):
            rw.collapse_bracket(start, e)
    top = tower_value(n)
    for start in reversed(_find_conjugates(rw.cur, top)):
        rw.push_through(start, top)
    if not free_reduce(rw.cur).is_empty():
        raise ShapeError(f"{kind}_{n} did not reduce to the empty word")
    terms = tuple((free_reduce(conj), idx, sign) for conj, idx, sign in rw.terms)
    logger.debug(f"trivialization {kind}_{n}: {len(terms)} terms")
    return AreaCertificate(start_word, terms)
