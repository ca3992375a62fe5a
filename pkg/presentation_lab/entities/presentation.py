from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from entities.errors import WordFormatError
from entities.word import RawWord, Word, free_reduce


# ── Копредставление ──────────────────────────────────────────────────

@dataclass(frozen=True)
class Presentation:
    """(генераторы, соотношения). Соотношения - сырые буквенные слова:
    Op1 вставляет пару g g^-1, которая не должна сократиться сама."""

    generators: Tuple[str, ...]     = ()
    relators:   Tuple[RawWord, ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise WordFormatError(f"duplicate generators {self.generators}")
        allowed = set(self.generators)
        for idx, rel in enumerate(self.relators):
            extra = {l.generator for l in rel} - allowed
            if extra:
                raise WordFormatError(f"relator {idx} uses {sorted(extra)} outside generators")

    @classmethod
    def from_words(cls, generators, words) -> Presentation:
        return cls(tuple(generators), tuple(w.letters() for w in words))

    def relator_word(self, i: int) -> Word:
        return free_reduce(self.relators[i])

    def words(self) -> List[Word]:
        return [free_reduce(r) for r in self.relators]

    def is_empty(self) -> bool:
        return not self.generators and not self.relators

    def is_balanced(self) -> bool:
        return len(self.generators) == len(self.relators)

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def __str__(self) -> str:
        from utils.text_formats import format_presentation
        return format_presentation(self)


# ── Ход Титце ────────────────────────────────────────────────────────

MOVE_KINDS = ("op1", "op1inv", "op2", "op3", "op4", "op5", "op5inv")


@dataclass(frozen=True)
class TietzeMove:
    kind:     str
    i:        Optional[int]     = None     # номер соотношения
    j:        Optional[int]     = None     # партнёр для op4
    pos:      Optional[int]     = None     # позиция вставки/удаления (op1, op1inv)
    gen:      Optional[str]     = None     # генератор (op1, op5inv)
    sign:     int               = 1        # знак вставляемой буквы (op1)
    rot:      int               = 0        # сдвиг (op2)
    word:     Optional[RawWord] = None     # расширенный op5: x_{r+1} * word
    extended: bool              = False    # op5inv: соотношение x_{r+1} a вместо x_{r+1}

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise WordFormatError(f"unknown move kind {self.kind!r}")

    def __str__(self) -> str:
        from utils.text_formats import format_move
        return format_move(self)
