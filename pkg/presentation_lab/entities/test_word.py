"""Запуск: python -m entities.test_word"""

import random

from entities.errors import WordFormatError
from entities.tower import TowerSum
from entities.word import (
    CyclicWord, Letter, Word, count_t, cyclic_permutations, cyclic_reduce, free_reduce, length,
)


def _letters(text: str):
    """`xYt` -> буквы; заглавная = обратная."""
    return [Letter(c.lower(), -1 if c.isupper() else 1) for c in text]


def _w(*blocks) -> Word:
    return Word(tuple(blocks))


def _raises(fn, exc) -> bool:
    try:
        fn()
    except exc:
        return True
    return False


def run_tests() -> bool:
    E5 = TowerSum.tower(5)

    reduce_cases = [
        ("xX",     _w()),
        ("xyYx",   _w(("x", 2))),
        ("TXxt",   _w()),
        ("xyxy",   _w(("x", 1), ("y", 1), ("x", 1), ("y", 1))),
        ("yyyTt",  _w(("y", 3))),
        ("",       _w()),
    ]

    length_cases = [
        ("empty",          _w(),                                   0,  0),
        ("Y^16 x y^16",    _w(("y", -16), ("x", 1), ("y", 16)),    33, 0),
        ("T x t Y",        _w(("t", -1), ("x", 1), ("t", 1), ("y", -1)), 4, 2),
        ("t^-5",           _w(("t", -5)),                          5,  5),
    ]

    cyclic_cases = [
        ("x y X",      _w(("x", 1), ("y", 1), ("x", -1)),            _w(("y", 1))),
        ("x y x",      _w(("x", 1), ("y", 1), ("x", 1)),             _w(("x", 2), ("y", 1))),
        ("x^2 y X^3",  _w(("x", 2), ("y", 1), ("x", -3)),            _w(("y", 1), ("x", -1))),
        ("x y X Y",    _w(("x", 1), ("y", 1), ("x", -1), ("y", -1)), _w(("x", 1), ("y", 1), ("x", -1), ("y", -1))),
        ("y x Y",      _w(("y", 1), ("x", 1), ("y", -1)),            _w(("x", 1))),
    ]

    perm_cases = [
        ("x y",   _w(("x", 1), ("y", 1)),  [_w(("x", 1), ("y", 1)), _w(("y", 1), ("x", 1))]),
        ("empty", _w(),                    [_w()]),
        ("x^3",   _w(("x", 3)),            [_w(("x", 3))] * 3),
    ]

    cyclic_eq_cases = [
        ("xy ~ yx",        CyclicWord(_w(("x", 1), ("y", 1))),  CyclicWord(_w(("y", 1), ("x", 1))),  True),
        ("xyX ~ y",        CyclicWord(_w(("x", 1), ("y", 1), ("x", -1))), CyclicWord(_w(("y", 1))), True),
        ("xy !~ xY",       CyclicWord(_w(("x", 1), ("y", 1))),  CyclicWord(_w(("x", 1), ("y", -1))), False),
        ("empty ~ empty",  CyclicWord(_w()),                    CyclicWord(Word.empty()),            True),
    ]

    total = passed = 0

    for raw, exp in reduce_cases:
        total += 1
        got = free_reduce(_letters(raw))
        if got == exp:
            passed += 1
        else:
            print(f"FAIL free_reduce: {raw!r} -> {got!r}, expected {exp!r}")

    # ассоциативность на случайных словах
    rng = random.Random(7)
    for _ in range(20):
        total += 1
        a, b, c = ("".join(rng.choice("xXyYtT") for _ in range(rng.randint(0, 8))) for _ in range(3))
        left = free_reduce(_letters(a)) * free_reduce(_letters(b)) * free_reduce(_letters(c))
        right = free_reduce(_letters(a + b + c))
        if left == right:
            passed += 1
        else:
            print(f"FAIL concat: {a!r}.{b!r}.{c!r} -> {left!r}, expected {right!r}")

    for name, w, exp_len, exp_t in length_cases:
        total += 1
        got = (length(w), count_t(w))
        if got == (exp_len, exp_t):
            passed += 1
        else:
            print(f"FAIL length: {name} -> {got!r}, expected {(exp_len, exp_t)!r}")

    total += 1
    big = Word.power("y", -E5) * Word.power("x", 1) * Word.power("y", E5)
    got = length(big)
    if got == E5 * 2 + 1:
        passed += 1
    else:
        print(f"FAIL length: symbolic conjugate -> {got}, expected 2*E5 + 1")

    total += 1
    got = Word.power("y", E5) * Word.power("y", -E5)
    if got.is_empty():
        passed += 1
    else:
        print(f"FAIL mul: y^E5 y^-E5 -> {got!r}, expected empty")

    for name, w, exp in cyclic_cases:
        total += 1
        got = cyclic_reduce(w)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL cyclic_reduce: {name} -> {got!r}, expected {exp!r}")

    for name, w, exp in perm_cases:
        total += 1
        got = cyclic_permutations(w)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL cyclic_permutations: {name} -> {got!r}, expected {exp!r}")

    for name, a, b, exp in cyclic_eq_cases:
        total += 1
        got = a == b
        if got == exp:
            passed += 1
        else:
            print(f"FAIL CyclicWord: {name} -> {got!r}, expected {exp!r}")

    error_cases = [
        ("zero exponent",     lambda: Word((("x", 0),))),
        ("adjacent blocks",   lambda: Word((("x", 1), ("x", 2)))),
        ("unknown generator", lambda: Letter("q")),
        ("bad sign",          lambda: Letter("x", 2)),
    ]
    for name, fn in error_cases:
        total += 1
        if _raises(fn, WordFormatError):
            passed += 1
        else:
            print(f"FAIL error: {name} did not raise WordFormatError")

    total += 1
    w = _w(("x", 2), ("t", -1), ("y", 3))
    if (w * w.inverse()).is_empty() and w.inverse().inverse() == w:
        passed += 1
    else:
        print(f"FAIL inverse: {w!r}")

    failed = total - passed
    if failed == 0:
        print(f"OK: {total} tests passed")
        return True
    print(f"FAILED: {failed}/{total}")
    return False


if __name__ == "__main__":
    raise SystemExit(0 if run_tests() else 1)
