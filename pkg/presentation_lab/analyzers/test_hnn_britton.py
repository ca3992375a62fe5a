"""Запуск: python -m analyzers.test_hnn_britton"""

import random

from analyzers.bs_arith import BsElement
from analyzers.hnn_britton import (
    DOWN, SYMBOLIC_GERSTEN, UP, britton_reduce, find_pinches, format_sequence,
    is_cyclically_n_reduced, is_n_reduced, is_trivial_in_g, parse_sequence,
)
from entities.errors import BudgetExceededError, fmt_int
from entities.tower import TowerSum
from entities.word import Word
from models.relator_factory import make_u, make_w, tower
from utils.text_formats import parse_word


def _random_word(rng: random.Random, size: int) -> Word:
    return parse_word(" ".join(rng.choice("xXyYtT") for _ in range(size)) or "1")


def run_tests() -> bool:
    pinch_cases = [
        ("T x^3 t",       [(DOWN, 3, 3)]),
        ("t x T",         []),
        ("t y^2 T",       [(UP, 2, 2)]),
        ("t Y^5 T",       [(UP, -5, 5)]),
        ("T y t",         []),
        ("x y",           []),
    ]

    reduce_cases = [
        ("T x t Y",        True,  1),
        ("x y",            False, 0),
        ("",               True,  0),
        ("t Y^5 T x^5",    True,  5),
        ("T x^3 t",        False, 3),
    ]

    trivial_cases = [
        ("x",              False),
        ("t",              False),
        ("Y x y X^2",      True),
        ("T y t",          False),
    ]

    reduced_cases = [
        ("T x t Y",       2,    False, False),
        ("T x t Y",       1,    True,  True),
        ("T x^3 t",       3,    True,  False),
        ("T x^3 t y^5",   3,    True,  True),
        ("T x^3 t y^5",   4,    False, False),
    ]

    total = passed = 0

    total += 1
    s = parse_sequence(parse_word("T x t"))
    exp_tail = ((-1, BsElement.x_power(1)), (1, BsElement.identity()))
    if s.g0.is_identity() and s.tail == exp_tail:
        passed += 1
    else:
        print(f"FAIL parse_sequence: 'T x t' -> {format_sequence(s)}")

    total += 1
    s = parse_sequence(parse_word("x y"))
    if s.tail == () and s.g0 == BsElement.x_power(1) * BsElement.y_power(1):
        passed += 1
    else:
        print(f"FAIL parse_sequence: 'x y' -> {format_sequence(s)}")

    total += 1
    got = format_sequence(parse_sequence(parse_word("T x t")))
    exp = "bs(0, 0, 0), t^-1, bs(1, 0, 0), t^1, bs(0, 0, 0)"
    if got == exp:
        passed += 1
    else:
        print(f"FAIL format_sequence: 'T x t' -> {got!r}, expected {exp!r}")

    for raw, exp in pinch_cases:
        total += 1
        got = [(p.direction, p.exponent, p.cost) for p in find_pinches(parse_sequence(parse_word(raw)))]
        if got == exp:
            passed += 1
        else:
            print(f"FAIL find_pinches: {raw!r} -> {got!r}, expected {exp!r}")

    for raw, exp_trivial, exp_cost in reduce_cases:
        total += 1
        reduced, cost = britton_reduce(parse_word(raw))
        got = (reduced.is_identity(), cost)
        if got == (exp_trivial, exp_cost):
            passed += 1
        else:
            print(f"FAIL britton_reduce: {raw!r} -> {got!r}, expected {(exp_trivial, exp_cost)!r}")

    for raw, exp in trivial_cases:
        total += 1
        got = is_trivial_in_g(parse_word(raw))
        if got == exp:
            passed += 1
        else:
            print(f"FAIL is_trivial_in_g: {raw!r} -> {got!r}, expected {exp!r}")

    for raw, n, exp_plain, exp_cyclic in reduced_cases:
        total += 1
        w = parse_word(raw)
        got = (is_n_reduced(w, n), is_cyclically_n_reduced(w, n))
        if got == (exp_plain, exp_cyclic):
            passed += 1
        else:
            print(f"FAIL n-reduced: {raw!r}, N={n} -> {got!r}, expected {(exp_plain, exp_cyclic)!r}")

    # u_n, w_n тривиальны в G
    for maker, n, m in [(make_u, 2, 2), (make_u, 3, 3), (make_u, 3, 1), (make_w, 3, 3), (make_w, 1, 0),
                        (make_u, 4, 4)]:
        total += 1
        fw = maker(n, m)
        if is_trivial_in_g(fw.word):
            passed += 1
        else:
            print(f"FAIL family trivial: {fw.kind}_{{{n},{m}}} not trivial")

    # сопряжённые соотношений
    rng = random.Random(11)
    relator = parse_word("T x t Y")
    for _ in range(10):
        total += 1
        z = _random_word(rng, rng.randint(0, 10))
        w = z * relator * z.inverse()
        if is_trivial_in_g(w):
            passed += 1
        else:
            print(f"FAIL conjugate trivial: {w}")

    # лестница редуцированности
    for n in (3, 4):
        a = Word.power("t", -1) * make_u(n, 1).word
        total += 1
        if is_cyclically_n_reduced(a, tower(n)) and is_cyclically_n_reduced(a.inverse(), tower(n)):
            passed += 1
        else:
            print(f"FAIL cyclic ladder: t^-1 u_{{{n},1}} not cyclically E_{n}-reduced")
        for m in range(n):
            total += 1
            if is_n_reduced(make_u(n, m + 1).word, tower(n - m)):
                passed += 1
            else:
                print(f"FAIL ladder: u_{{{n},{m + 1}}} not E_{n - m}-reduced")

    total += 1
    a6 = Word.power("t", -1) * make_u(6, 1, symbolic=True).word
    if is_cyclically_n_reduced(a6, TowerSum.tower(6), SYMBOLIC_GERSTEN):
        passed += 1
    else:
        print("FAIL symbolic ladder: t^-1 u_{6,1} not cyclically E_6-reduced")

    total += 1
    try:
        britton_reduce(make_u(5, 5).word)
        print("FAIL budget: u_5 reduced without BudgetExceededError")
    except BudgetExceededError:
        passed += 1

    total += 1
    try:
        is_trivial_in_g(make_w(5, 5).word)
        print("FAIL budget: w_5 decided without BudgetExceededError")
    except BudgetExceededError as e:
        if "budget exceeded" in str(e):
            passed += 1
        else:
            print(f"FAIL budget message: {e}")

    fmt_cases = [
        (65536,            "65536"),
        (2 ** 64 - 1,      "18446744073709551615"),
        (2 ** 65536,       "~2^65536"),
        (-(2 ** 100),      "~2^100"),
        ("2^E5",           "2^E5"),
    ]
    for value, exp in fmt_cases:
        total += 1
        got = fmt_int(value)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL fmt_int: -> {got!r}, expected {exp!r}")

    # n=5 символьно: u_{5,m}, w_{5,m} при m <= 2
    for maker in (make_u, make_w):
        for m in (0, 1, 2):
            total += 1
            fw = maker(5, m, symbolic=True)
            if is_trivial_in_g(fw.word, SYMBOLIC_GERSTEN):
                passed += 1
            else:
                print(f"FAIL symbolic trivial: {fw.kind}_{{5,{m}}}")

    failed = total - passed
    if failed == 0:
        print(f"OK: {total} tests passed")
        return True
    print(f"FAILED: {failed}/{total}")
    return False


if __name__ == "__main__":
    raise SystemExit(0 if run_tests() else 1)
