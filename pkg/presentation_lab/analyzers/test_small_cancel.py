"""Запуск: python -m analyzers.test_small_cancel"""

from fractions import Fraction

from analyzers.bs_arith import BsElement
from analyzers.small_cancel import (
    BandLabel, family_symmetrized_set, hand_gap_table, invert_member, max_piece,
    propagate_band, symmetrize, verify_c_prime,
)
from entities.errors import NotCyclicallyReducedError, fmt_int
from models.relator_factory import tower
from utils.text_formats import parse_word


X, Y = BsElement.x_power, BsElement.y_power


def run_tests() -> bool:
    band_cases = [
        ("x^3 | x0 | x^3 -> x",    X(3),  X(3),  BandLabel("x", 0),  "x",  0),
        ("y^3 | x0 | y^3 -> x",    Y(3),  Y(3),  BandLabel("x", 0),  "x",  0),
        ("y^3 | x1 | y^3 -> x",    Y(3),  Y(3),  BandLabel("x", 1),  "x",  8),
        ("y^3 | x1 | y^3 -> y",    Y(3),  Y(3),  BandLabel("x", 1),  "y",  None),
        ("x^5 | x0 | X^5 -> y",    X(5),  X(-5), BandLabel("x", 0),  "y",  None),
        ("x^5 | x0 | X^5 -> x",    X(5),  X(-5), BandLabel("x", 0),  "x",  -10),
        ("x^3 | y2 | x^3 -> y",    X(3),  X(3),  BandLabel("y", 2),  "y",  None),
        ("x^3 | y2 | x^3 -> x",    X(3),  X(3),  BandLabel("y", 2),  "x",  None),
        ("1 | y2 | 1 -> y",        X(0),  X(0),  BandLabel("y", 2),  "y",  2),
        ("1 | x0 | y -> y",        X(0),  Y(1),  BandLabel("x", 0),  "y",  1),
    ]

    total = passed = 0

    for name, g, g2, label, side, exp in band_cases:
        total += 1
        got = propagate_band(g, g2, label, side)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL propagate_band: {name} -> {got!r}, expected {exp!r}")

    # symmetrize
    total += 1
    R = symmetrize([], 3)
    if len(R) == 0 and verify_c_prime(R, Fraction(1, 6)).verdict:
        passed += 1
    else:
        print(f"FAIL symmetrize: empty -> {len(R)} members")

    total += 1
    try:
        symmetrize([parse_word("T x t Y")], 2)
        print("FAIL symmetrize: T x t Y with N=2 accepted")
    except NotCyclicallyReducedError as e:
        if e.cost == 1:
            passed += 1
        else:
            print(f"FAIL symmetrize: T x t Y cost {e.cost}, expected 1")

    total += 1
    R = symmetrize([parse_word("T x^3 t Y^3")], 3)
    closed = all(invert_member(m) in R.members for m in R.members)
    if len(R) == 4 and closed:
        passed += 1
    else:
        print(f"FAIL symmetrize: T x^3 t Y^3 -> {len(R)} members, closed={closed}")

    total += 1
    cert = verify_c_prime(R, Fraction(1, 6))
    if not cert.verdict and cert.relator_t == 2 and cert.max_piece_t >= 1:
        passed += 1
    else:
        print(f"FAIL verify_c_prime: T x^3 t Y^3 -> verdict {cert.verdict}, "
              f"relator_t {cert.relator_t}, max piece {cert.max_piece_t}")

    # член с самим собой без сдвига - не кусок
    total += 1
    m = max_piece(R, 0, 0, window=0)
    if m.length_t == 0:
        passed += 1
    else:
        print(f"FAIL max_piece: self match at offset 0 -> {m.length_t}, expected 0")

    # R_n: C'(1/6, E_n), кусок 4 из 25
    for n, symbolic in ((4, False), (5, False), (4, True), (5, True), (6, True)):
        total += 1
        R = family_symmetrized_set(n, symbolic)
        cert = verify_c_prime(R, Fraction(1, 6))
        got = (cert.verdict, cert.max_piece_t, cert.relator_t)
        if got == (True, 4, 25) and len(R) <= 50:
            passed += 1
        else:
            print(f"FAIL R_{n} symbolic={symbolic}: {got!r}, expected (True, 4, 25), members {len(R)}")

    total += 1
    R = family_symmetrized_set(4)
    if R.n == tower(4):
        passed += 1
    else:
        print(f"FAIL family N: {R.n}, expected E_4")

    # метки полос на сигнатурных блоках: проходит только нулевая
    for k in (3, 5, 7, -3, -5, -7):
        total += 1
        through = [j for j in range(-8, 9) if propagate_band(X(k), X(k), BandLabel("y", j), "y") is not None]
        if through == [0] and propagate_band(X(k), X(k), BandLabel("y", 0), "y") == 0:
            passed += 1
        else:
            print(f"FAIL signature labels: x^{k} passes labels {through!r}, expected [0]")

    # length_t(r, r') == length_t(r', r)
    total += 1
    R = family_symmetrized_set(4)
    lengths = [[max_piece(R, i, j).length_t for j in range(len(R))] for i in range(len(R))]
    asymmetric = [(i, j) for i in range(len(R)) for j in range(i) if lengths[i][j] != lengths[j][i]]
    if not asymmetric:
        passed += 1
    else:
        print(f"FAIL piece symmetry: R_4 pairs {asymmetric[:5]!r}")

    total += 1
    R = family_symmetrized_set(5)
    if R.n == tower(5) and "~2^" in fmt_int(R.n):
        passed += 1
    else:
        print(f"FAIL family N: n=5 -> {fmt_int(R.n)}, expected E_5")

    total += 1
    rows = hand_gap_table(4)
    gaps = sorted(gap for _, _, gap in rows)
    if gaps == [4, 4, 4, 4, 4, 5]:
        passed += 1
    else:
        print(f"FAIL hand_gap_table: {rows!r}")

    total += 1
    if hand_gap_table(6, symbolic=True) == hand_gap_table(4):
        passed += 1
    else:
        print("FAIL hand_gap_table: symbolic n=6 differs from n=4")

    failed = total - passed
    if failed == 0:
        print(f"OK: {total} tests passed")
        return True
    print(f"FAILED: {failed}/{total}")
    return False


if __name__ == "__main__":
    raise SystemExit(0 if run_tests() else 1)
