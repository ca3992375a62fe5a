"""Запуск: python -m entities.test_tower"""

from fractions import Fraction

from entities.errors import BudgetExceededError, SymbolicRangeError
from entities.tower import TowerSum, collapse, tower_value


def _raises(fn, exc) -> bool:
    try:
        fn()
    except exc:
        return True
    return False


def run_tests() -> bool:
    E = TowerSum.tower

    value_cases = [
        (0, 1),
        (1, 2),
        (2, 4),
        (3, 16),
        (4, 65536),
    ]

    compare_cases = [
        ("E3 + 1 == 17",            E(3) + 1 == 17,                         True),
        ("E6 > 1000*E5",            E(6) > E(5) * 1000,                     True),
        ("E6 - E6 == 0",            E(6) - E(6) == 0,                       True),
        ("-E6 < E5",                -E(6) < E(5),                           True),
        ("E5 == 2^E4",              E(5) == 2 ** tower_value(4),            True),
        ("collapse E1 is int",      collapse(E(1)) == 2 and isinstance(collapse(E(1)), int), True),
        ("E6 stays symbolic",       isinstance(collapse(E(6)), TowerSum),   True),
        ("E6/2 is integer",         TowerSum({6: Fraction(1, 2)}).is_integer(), True),
        ("1/3 is not integer",      TowerSum(const=Fraction(1, 3)).is_integer(), False),
    ]

    shift_cases = [
        ("1 * 2^E5 = E6",           TowerSum.of(1).times_pow2(E(5)),          E(6)),
        ("E6 * 2^-E5 = 1",          E(6).times_pow2(-E(5)),                   TowerSum.of(1)),
        ("3 * 2^(E5+1) = 6*E6",     TowerSum.of(3).times_pow2(E(5) + 1),      E(6) * 6),
        ("E3 * 2^2 = 64",           E(3).times_pow2(2),                       TowerSum.of(64)),
        ("E3 * 2^E3 exact",         E(3).times_pow2(E(3)),                    TowerSum.of(16 * 2 ** 16)),
    ]

    str_cases = [
        (TowerSum({5: 12}, 36),     "12*E5 + 36"),
        (E(7) - 3,                  "E7 - 3"),
        (TowerSum(),                "0"),
    ]

    error_cases = [
        ("tower_value(6)",          lambda: tower_value(6),                   BudgetExceededError),
        ("E6 to_int",               lambda: E(6).to_int(),                    BudgetExceededError),
        ("E6 * 2^E6",               lambda: E(6).times_pow2(E(6)),            SymbolicRangeError),
        ("E3 * 2^(2^30)",           lambda: E(3).times_pow2(2 ** 30),         BudgetExceededError),
        ("1/3 to_int",              lambda: TowerSum(const=Fraction(1, 3)).to_int(), SymbolicRangeError),
    ]

    total = passed = 0

    for n, exp in value_cases:
        total += 1
        got = tower_value(n)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL tower_value: {n!r} -> {got!r}, expected {exp!r}")

    for name, got, exp in compare_cases:
        total += 1
        if got == exp:
            passed += 1
        else:
            print(f"FAIL compare: {name} -> {got!r}, expected {exp!r}")

    for name, got, exp in shift_cases:
        total += 1
        if got == exp:
            passed += 1
        else:
            print(f"FAIL times_pow2: {name} -> {got}, expected {exp}")

    for value, exp in str_cases:
        total += 1
        got = str(value)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL str: {value!r} -> {got!r}, expected {exp!r}")

    for name, fn, exc in error_cases:
        total += 1
        if _raises(fn, exc):
            passed += 1
        else:
            print(f"FAIL error: {name} did not raise {exc.__name__}")

    failed = total - passed
    if failed == 0:
        print(f"OK: {total} tests passed")
        return True
    print(f"FAILED: {failed}/{total}")
    return False


if __name__ == "__main__":
    raise SystemExit(0 if run_tests() else 1)
