from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from config.settings import Config
from entities.errors import BudgetExceededError, WordFormatError, fmt_int
from entities.tower import Exponent, TowerSum, collapse, exp_sign, materialize


GENERATORS = ("x", "y", "t")
STABLE = "t"

_INDEXED_RE = re.compile(r"^x_\d+$")


def is_generator_name(name: str) -> bool:
    return name in GENERATORS or bool(_INDEXED_RE.match(name))


# ── Буквы ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Letter:
    generator: str
    sign:      int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise WordFormatError(f"letter sign must be +-1, got {self.sign}")
        if not is_generator_name(self.generator):
            raise WordFormatError(f"unknown generator {self.generator!r}")

    def inverse(self) -> Letter:
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return self.generator if self.sign > 0 else self.generator.upper()


RawWord = Tuple[Letter, ...]
Block   = Tuple[str, Exponent]


def invert_letters(letters: Sequence[Letter]) -> RawWord:
    return tuple(l.inverse() for l in reversed(letters))


# ── Слова ─────────────────────────────────────────────────────────────

def _push(stack: List[Block], gen: str, exp: Exponent) -> None:
    """Добавить блок, сливая с хвостом; нулевые блоки исчезают каскадом."""
    exp = collapse(exp)
    if exp_sign(exp) == 0:
        return
    while stack and stack[-1][0] == gen:
        prev_gen, prev_exp = stack.pop()
        exp = collapse(prev_exp + exp)
        if exp_sign(exp) == 0:
            return
    stack.append((gen, exp))


@dataclass(frozen=True)
class Word:
    """Свободно приведённое слово в run-length форме (gen, exp)."""

    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.blocks:
            if not is_generator_name(gen):
                raise WordFormatError(f"unknown generator {gen!r}")
            if exp_sign(exp) == 0:
                raise WordFormatError(f"zero exponent on {gen}")
            if gen == prev:
                raise WordFormatError(f"adjacent blocks share generator {gen}")
            prev = gen

    @classmethod
    def from_blocks(cls, blocks: Iterable[Block]) -> Word:
        stack: List[Block] = []
        for gen, exp in blocks:
            _push(stack, gen, exp)
        return cls(tuple(stack))

    @classmethod
    def power(cls, gen: str, exp: Exponent) -> Word:
        return cls.from_blocks([(gen, exp)])

    @classmethod
    def empty(cls) -> Word:
        return cls(())

    def is_empty(self) -> bool:
        return not self.blocks

    def is_symbolic(self) -> bool:
        return any(isinstance(e, TowerSum) for _, e in self.blocks)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        stack = list(self.blocks)
        for gen, exp in other.blocks:
            _push(stack, gen, exp)
        return Word(tuple(stack))

    def inverse(self) -> Word:
        return Word(tuple((g, -e) for g, e in reversed(self.blocks)))

    def generators(self) -> set:
        return {g for g, _ in self.blocks}

    def letters(self) -> RawWord:
        total = 0
        concrete = []
        for gen, exp in self.blocks:
            n = materialize(exp)
            total += abs(n)
            if total > Config.LETTER_LIMIT:
                raise BudgetExceededError(
                    f"{fmt_int(total)}+ letters", Config.LETTER_LIMIT, what="letter expansion"
                )
            concrete.append((gen, n))
        out: List[Letter] = []
        for gen, n in concrete:
            letter = Letter(gen, 1 if n > 0 else -1)
            out.extend([letter] * abs(n))
        return tuple(out)

    def __str__(self) -> str:
        # Local import to avoid circular imports at module load time.
        from utils.text_formats import format_word
        return format_word(self)


# ── Операции word-core ───────────────────────────────────────────────

def free_reduce(items: Iterable[Union[Letter, Block]]) -> Word:
    stack: List[Block] = []
    for item in items:
        if isinstance(item, Letter):
            _push(stack, item.generator, item.sign)
        else:
            gen, exp = item
            _push(stack, gen, exp)
    return Word(tuple(stack))


def length(w: Word) -> Exponent:
    total: Exponent = 0
    for _, exp in w.blocks:
        total = total + abs(exp)
    return collapse(total)


def count_t(w: Word) -> Exponent:
    total: Exponent = 0
    for gen, exp in w.blocks:
        if gen == STABLE:
            total = total + abs(exp)
    return collapse(total)


def cyclic_reduce(w: Word) -> Word:
    blocks = list(w.blocks)
    while len(blocks) >= 2 and blocks[0][0] == blocks[-1][0]:
        gen, first = blocks[0]
        _, last = blocks[-1]
        if exp_sign(first) == exp_sign(last):
            # тот же знак: поворот переносит хвост в начало
            blocks = [(gen, collapse(last + first))] + blocks[1:-1]
            break
        cut = min(abs(first), abs(last))
        first = collapse(first - cut if exp_sign(first) > 0 else first + cut)
        last = collapse(last - cut if exp_sign(last) > 0 else last + cut)
        middle = blocks[1:-1]
        head = [(gen, first)] if exp_sign(first) != 0 else []
        tail = [(gen, last)] if exp_sign(last) != 0 else []
        blocks = head + middle + tail
        blocks = list(Word.from_blocks(blocks).blocks)
    return Word.from_blocks(blocks)


def cyclic_permutations(w: Word) -> List[Word]:
    """Все повороты по буквам (блок может разрезаться)."""
    letters = cyclic_reduce(w).letters()
    if not letters:
        return [Word.empty()]
    return [free_reduce(letters[i:] + letters[:i]) for i in range(len(letters))]


class CyclicWord:
    """Слово с точностью до циклического сдвига."""

    __slots__ = ("representative",)

    def __init__(self, w: Word):
        self.representative = cyclic_reduce(w)

    def _key(self) -> Tuple[Block, ...]:
        return self.representative.blocks

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        a, b = self._key(), other._key()
        if len(a) != len(b):
            return False
        if not a:
            return True
        doubled = a + a
        return any(doubled[i:i + len(b)] == b for i in range(len(a)))

    def __hash__(self) -> int:
        return hash((len(self._key()), tuple(sorted(str(b) for b in self._key()))))

    def __str__(self) -> str:
        return f"({self.representative})"
