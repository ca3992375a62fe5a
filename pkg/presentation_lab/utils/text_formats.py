"""Текстовые форматы: слова, копредставления, скрипты, сертификаты, диаграммы.

Слово:         `Y^16 x y^16 x^3`  (заглавная буква = обратная, `g^E5` = башня)
Копредставление:
    gens: x y t
    rel: Y x y X^2
Скрипт Титце:  одна операция в строке, `op4 i=0 j=2`
Сертификат:    `conj=<word> rel=<index> sign=+1`
Диаграмма:     `dart <id> <reverse> <next> <label>` / `face <id> <kind> ...`
"""

from __future__ import annotations

import re
import shlex
from typing import Dict, List, Tuple

from entities.errors import WordFormatError
from entities.tower import Exponent, TowerSum, collapse, materialize
from entities.word import Letter, RawWord, Word, is_generator_name


_TOKEN_RE = re.compile(r"^([a-zA-Z](?:_\d+)?)(?:\^(-?)(\d+|E\d+))?$")


# ── Слова ─────────────────────────────────────────────────────────────

def _parse_token(token: str) -> Tuple[str, Exponent]:
    m = _TOKEN_RE.match(token)
    if not m:
        raise WordFormatError(f"bad token {token!r}")
    name, minus, power = m.group(1), m.group(2), m.group(3)
    gen = name.lower()
    if not is_generator_name(gen):
        raise WordFormatError(f"unknown generator in token {token!r}")
    sign = -1 if name[0].isupper() else 1
    if power is None:
        exp: Exponent = 1
    elif power.startswith("E"):
        exp = collapse(TowerSum.tower(int(power[1:])))
    else:
        exp = int(power)
        if exp == 0:
            raise WordFormatError(f"zero exponent in token {token!r}")
    if minus:
        sign = -sign
    return gen, collapse(exp * sign) if isinstance(exp, TowerSum) else exp * sign


def parse_letters(text: str) -> RawWord:
    """Слово как последовательность букв, без сокращений."""
    out: List[Letter] = []
    if text.strip() in ("", "1", "e"):
        return ()
    for token in text.split():
        gen, exp = _parse_token(token)
        n = materialize(exp)
        out.extend([Letter(gen, 1 if n > 0 else -1)] * abs(n))
    return tuple(out)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1", "e"):
        return Word.empty()
    return Word.from_blocks(_parse_token(tok) for tok in text.split())


def _format_block(gen: str, exp: Exponent, symbolic: bool = True) -> str:
    if isinstance(exp, TowerSum):
        if not symbolic:
            exp = exp.to_int()
        else:
            level, coeff = exp.single_level()
            if coeff not in (1, -1):
                raise WordFormatError(f"exponent {exp} has no token form")
            name = gen if coeff > 0 else gen.upper()
            return f"{name}^E{level}"
    name = gen if exp > 0 else gen.upper()
    return name if abs(exp) == 1 else f"{name}^{abs(exp)}"


def format_word(w: Word, symbolic: bool = True) -> str:
    if w.is_empty():
        return "1"
    return " ".join(_format_block(g, e, symbolic) for g, e in w.blocks)


def format_letters(letters: RawWord) -> str:
    """Сырое слово: одинаковые соседние буквы сжимаются, пары g g^-1 остаются."""
    if not letters:
        return "1"
    out: List[str] = []
    run, prev = 0, None
    for l in tuple(letters) + (None,):
        if l == prev:
            run += 1
            continue
        if prev is not None:
            out.append(str(prev) if run == 1 else f"{prev}^{run}")
        prev, run = l, 1
    return " ".join(out)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


# ── Копредставления ──────────────────────────────────────────────────

def format_presentation(p) -> str:
    lines = ["gens: " + " ".join(p.generators)]
    lines += ["rel: " + format_letters(r) for r in p.relators]
    return "\n".join(lines)


def parse_presentation(text: str):
    from entities.presentation import Presentation

    gens = None
    rels: List[RawWord] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise WordFormatError(f"line {lineno}: expected 'gens:' or 'rel:', got {raw!r}")
        key = key.strip()
        if key == "gens":
            if gens is not None:
                raise WordFormatError(f"line {lineno}: second 'gens:' line")
            gens = tuple(rest.split())
            for g in gens:
                if not is_generator_name(g):
                    raise WordFormatError(f"line {lineno}: bad generator {g!r}")
        elif key == "rel":
            rels.append(parse_letters(rest))
        else:
            raise WordFormatError(f"line {lineno}: unknown key {key!r}")
    if gens is None:
        raise WordFormatError("presentation has no 'gens:' line")
    return Presentation(gens, tuple(rels))


# ── Скрипты Титце ────────────────────────────────────────────────────

_MOVE_FIELDS: Dict[str, Tuple[str, ...]] = {
    "op1":    ("i", "pos", "gen", "sign"),
    "op1inv": ("i", "pos"),
    "op2":    ("i", "rot"),
    "op3":    ("i",),
    "op4":    ("i", "j"),
    "op5":    ("word",),
    "op5inv": ("gen", "extended"),
}
_INT_FIELDS = ("i", "j", "pos", "sign", "rot")
_FLAG_FIELDS = ("extended",)


def format_move(mv) -> str:
    parts = [mv.kind]
    for name in _MOVE_FIELDS[mv.kind]:
        value = getattr(mv, name)
        if value is None or (name in _FLAG_FIELDS and not value):
            continue
        if name in _FLAG_FIELDS:
            parts.append(f"{name}=1")
        elif name == "word":
            parts.append(f'word="{format_letters(value)}"')
        else:
            parts.append(f"{name}={value}")
    return " ".join(parts)


def parse_move(line: str):
    from entities.presentation import TietzeMove

    try:
        tokens = shlex.split(line)
    except ValueError as e:
        raise WordFormatError(f"bad move line {line!r}: {e}") from e
    if not tokens:
        raise WordFormatError("empty move line")
    kind, args = tokens[0], {}
    if kind not in _MOVE_FIELDS:
        raise WordFormatError(f"unknown move {kind!r}")
    for tok in tokens[1:]:
        name, sep, value = tok.partition("=")
        if not sep or name not in _MOVE_FIELDS[kind]:
            raise WordFormatError(f"{kind}: unexpected argument {tok!r}")
        if name in _INT_FIELDS:
            try:
                args[name] = int(value)
            except ValueError as e:
                raise WordFormatError(f"{kind}: {name} must be an integer, got {value!r}") from e
        elif name in _FLAG_FIELDS:
            if value not in ("0", "1"):
                raise WordFormatError(f"{kind}: {name} must be 0 or 1, got {value!r}")
            args[name] = value == "1"
        elif name == "word":
            args[name] = parse_letters(value)
        else:
            args[name] = value
    return TietzeMove(kind, **args)


def parse_script(text: str) -> list:
    moves = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        try:
            moves.append(parse_move(line))
        except WordFormatError as e:
            raise WordFormatError(f"line {lineno}: {e}") from e
    return moves


def format_script(moves) -> str:
    return "\n".join(format_move(mv) for mv in moves)


# ── Сертификаты ──────────────────────────────────────────────────────

def format_certificate(c) -> str:
    lines = [f"word: {format_word(c.word)}"]
    for conj, idx, sign in c.terms:
        lines.append(f'conj="{format_word(conj)}" rel={idx} sign={sign:+d}')
    return "\n".join(lines)


def parse_certificate(text: str, word: Word = None):
    """`word:` можно не писать, если слово передано отдельно."""
    from analyzers.area_oracle import AreaCertificate

    terms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line.startswith("word:"):
            word = parse_word(line[len("word:"):])
            continue
        fields: Dict[str, str] = {}
        try:
            for tok in shlex.split(line):
                name, sep, value = tok.partition("=")
                if not sep:
                    raise WordFormatError(f"expected key=value, got {tok!r}")
                fields[name] = value
            conj = parse_word(fields["conj"])
            idx = int(fields["rel"])
            sign = int(fields["sign"])
        except (KeyError, ValueError) as e:
            raise WordFormatError(f"line {lineno}: bad certificate term {raw!r}") from e
        if sign not in (1, -1):
            raise WordFormatError(f"line {lineno}: sign must be +1 or -1")
        terms.append((conj, idx, sign))
    if word is None:
        raise WordFormatError("certificate has no 'word:' line")
    return AreaCertificate(word, tuple(terms))


# ── Диаграммы ────────────────────────────────────────────────────────

def _opt(value) -> str:
    return "-" if value is None else str(value)


def format_diagram(d) -> str:
    lines = [f"dart {k} {d.reverse[k]} {d.next[k]} {d.labels[k]}" for k in range(d.size)]
    for f in d.faces:
        sign = "-" if f.sign is None else f"{f.sign:+d}"
        lines.append(
            f"face {f.id} {f.kind} {_opt(f.relator)} {_opt(f.rotation)} {sign} {_opt(f.dart0)}"
        )
    return "\n".join(lines)


def _int_or_none(token: str):
    return None if token == "-" else int(token)


def parse_diagram(text: str):
    from diagrams.diagram import Diagram, Face

    darts: Dict[int, Tuple[int, int, Letter]] = {}
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "dart" and len(tok) == 5:
                letters = parse_letters(tok[4])
                if len(letters) != 1:
                    raise WordFormatError(f"dart label must be one letter, got {tok[4]!r}")
                darts[int(tok[1])] = (int(tok[2]), int(tok[3]), letters[0])
            elif tok[0] == "face" and len(tok) == 7:
                faces.append(Face(
                    id=int(tok[1]),
                    kind=tok[2],
                    relator=_int_or_none(tok[3]),
                    rotation=_int_or_none(tok[4]),
                    sign=_int_or_none(tok[5]),
                    dart0=_int_or_none(tok[6]),
                ))
            else:
                raise WordFormatError(f"unknown record {raw!r}")
        except ValueError as e:
            raise WordFormatError(f"line {lineno}: {e}") from e
    if sorted(darts) != list(range(len(darts))):
        raise WordFormatError("dart ids must be 0..N-1")
    order = range(len(darts))
    return Diagram(
        reverse=tuple(darts[k][0] for k in order),
        next=tuple(darts[k][1] for k in order),
        labels=tuple(darts[k][2] for k in order),
        faces=tuple(faces),
    )
