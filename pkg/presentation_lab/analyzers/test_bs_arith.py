"""Запуск: python -m analyzers.test_bs_arith"""

from analyzers.bs_arith import (
    BsElement, Dyadic, bs_eval, in_x_subgroup, in_y_subgroup, solitar_solve,
)
from analyzers.symbolic_base import SymbolicBs, symbolic_eval, symbolic_in_x, symbolic_in_y
from entities.errors import BudgetExceededError, ShapeError
from entities.tower import TowerSum
from utils.text_formats import parse_word


def _bs(a, k=0) -> BsElement:
    if isinstance(a, tuple):
        return BsElement(Dyadic.make(*a), k)
    return BsElement(Dyadic.of(a), k)


def run_tests() -> bool:
    eval_cases = [
        ("Y x y",        _bs(2)),
        ("",             _bs(0)),
        ("Y^2 x y^2",    _bs(4)),
        ("y x Y",        _bs((1, 1))),
        ("y",            _bs(0, 1)),
        ("x^3 y X^3",    _bs((3, 1), 1)),     # a = 3 - 3/2
        ("Y x y x^-2",   _bs(0)),
    ]

    x_cases = [
        (_bs(3),         3),
        (_bs((1, 1)),    None),
        (_bs(0, -5),     None),
        (_bs(0),         0),
    ]

    y_cases = [
        (_bs(0, 7),      7),
        (_bs(1),         None),
        (_bs(0),         0),
    ]

    solitar_cases = [
        ((-1, 1, 1),     2),
        ((1, 4, -1),     2),
        ((1, 1, -1),     None),
        ((2, 8, -2),     2),
        ((1, 1, 1),      None),
        ((-3, 5, 3),     40),
    ]

    total = passed = 0

    for raw, exp in eval_cases:
        total += 1
        got = bs_eval(parse_word(raw))
        if got == exp:
            passed += 1
        else:
            print(f"FAIL bs_eval: {raw!r} -> {got}, expected {exp}")

    for e, exp in x_cases:
        total += 1
        got = in_x_subgroup(e)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL in_x_subgroup: {e} -> {got!r}, expected {exp!r}")

    for e, exp in y_cases:
        total += 1
        got = in_y_subgroup(e)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL in_y_subgroup: {e} -> {got!r}, expected {exp!r}")

    for args, exp in solitar_cases:
        total += 1
        got = solitar_solve(*args)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL solitar_solve: {args!r} -> {got!r}, expected {exp!r}")

    # групповые законы
    words = ["x y X Y", "Y^3 x^5 y^2", "y^4 x Y^4 x", "x^7"]
    for raw in words:
        total += 1
        e = bs_eval(parse_word(raw))
        if (e * e.inverse()).is_identity() and (e.inverse() * e).is_identity():
            passed += 1
        else:
            print(f"FAIL inverse: {raw!r} -> {e}")

    total += 1
    u, v = parse_word("Y^2 x"), parse_word("y x^3 Y")
    if bs_eval(u * v) == bs_eval(u) * bs_eval(v):
        passed += 1
    else:
        print("FAIL homomorphism: bs_eval(uv) != bs_eval(u) bs_eval(v)")

    # символьный вариант: y^-E5 x y^E5 = x^E6
    E5 = TowerSum.tower(5)
    w = parse_word("Y^E5 x y^E5")
    total += 1
    got = symbolic_in_x(symbolic_eval(w))
    if got == TowerSum.tower(6):
        passed += 1
    else:
        print(f"FAIL symbolic_eval: Y^E5 x y^E5 -> {got}, expected E6")

    total += 1
    got = symbolic_in_y(symbolic_eval(parse_word("y^E5")))
    if got == E5:
        passed += 1
    else:
        print(f"FAIL symbolic_in_y: y^E5 -> {got}, expected E5")

    total += 1
    s = SymbolicBs.x_power(3) * SymbolicBs.y_power(2)
    if symbolic_eval(parse_word("x^3 y^2")) == s:
        passed += 1
    else:
        print(f"FAIL symbolic agreement: x^3 y^2 -> {symbolic_eval(parse_word('x^3 y^2'))}")

    error_cases = [
        ("t in bs_eval",     lambda: bs_eval(parse_word("t x")),                  ShapeError),
        ("huge shift",       lambda: Dyadic.of(1).times_pow2(2 ** 21),            BudgetExceededError),
        ("huge y conjugate", lambda: bs_eval(parse_word("Y^2000000 x y^2000000")), BudgetExceededError),
    ]
    for name, fn, exc in error_cases:
        total += 1
        try:
            fn()
            print(f"FAIL error: {name} did not raise {exc.__name__}")
        except exc:
            passed += 1

    failed = total - passed
    if failed == 0:
        print(f"OK: {total} tests passed")
        return True
    print(f"FAILED: {failed}/{total}")
    return False


if __name__ == "__main__":
    raise SystemExit(0 if run_tests() else 1)
