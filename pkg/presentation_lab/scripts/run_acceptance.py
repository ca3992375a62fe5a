"""Приёмочные проверки: семейства, Бриттон, C'(1/6), площадь, Титце, диаграммы.

Run:
  python scripts/run_acceptance.py
  python scripts/run_acceptance.py --only 1 4 --node-limit 200000
  python scripts/run_acceptance.py --only 5 7 --search-seconds 30 --check-seconds 120
"""

import argparse
import logging
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", datefmt="%H:%M:%S")
logger = logging.getLogger(__name__)

from tabulate import tabulate

from analyzers.area_oracle import FOUND, AreaQuery, area_search, area_w1, check_certificate, min_area
from analyzers.hnn_britton import (
    SYMBOLIC_GERSTEN, is_cyclically_n_reduced, is_n_reduced, is_trivial_in_g,
)
from analyzers.small_cancel import family_symmetrized_set, verify_c_prime
from config.settings import Config
from diagrams.bands import group_cables, trace_bands
from diagrams.dual import euler_audit
from diagrams.fixtures import baum, cable, loop_l1, parallel_l2
from entities.errors import BudgetExceededError, SymbolicRangeError
from entities.presentation import Presentation, TietzeMove
from entities.tower import TowerSum
from entities.word import Word, cyclic_reduce
from models.relator_factory import (
    R0, R1, conversion_certificate, conversion_cost, length_formula, make_a, make_mu,
    make_mu0, make_u, make_w, tower,
)
from models.tietze_engine import apply_move
from utils.text_formats import parse_presentation, parse_word


# ── 1. Длины ─────────────────────────────────────────────────────────

def check_lengths(args) -> bool:
    rows, ok = [], True
    for n in range(5, 13):
        l, lt = length_formula("a", n, n)
        direct = len(make_a(n).word.letters()) if n <= 8 else None
        good = l < 100 * 2 ** n and (direct is None or direct == l)
        ok &= good
        rows.append((n, l, lt, 100 * 2 ** n, "-" if direct is None else direct, "✅" if good else "❌"))
    print(tabulate(rows, headers=["n", "l(a_n)", "l_t(a_n)", "100*2^n", "letters", ""], tablefmt="simple"))
    return ok


# ── 2. Тривиальность в G ─────────────────────────────────────────────

def _attempt(fn):
    try:
        return fn()
    except (BudgetExceededError, SymbolicRangeError) as e:
        logger.info(f"undecided: {e}")
        return None


def check_trivial(args) -> bool:
    rows, ok = [], True
    for kind, maker in (("u", make_u), ("w", make_w)):
        for n in range(0, 6):
            for m in range(0, n + 1):
                name = f"{kind}_{{{n},{m}}}"
                concrete = _attempt(lambda: is_trivial_in_g(maker(n, m).word))
                symbolic = None
                if n == 5:
                    symbolic = _attempt(lambda: is_trivial_in_g(
                        maker(n, m, symbolic=True).word, SYMBOLIC_GERSTEN))
                if concrete is None and symbolic is None:
                    # верхние сопряжения при n = 5 требуют целых в 2^65536 бит
                    expected = n == 5 and m >= 3
                    ok &= expected
                    rows.append((name, "budget", "", "expected" if expected else "unexpected"))
                    continue
                verdict = concrete if concrete is not None else symbolic
                agree = concrete is None or symbolic is None or concrete == symbolic
                ok &= verdict and agree
                if not (verdict and agree) or m == n or n == 5:
                    rows.append((name, concrete, symbolic, "" if agree else "modes disagree"))
    print(tabulate(rows, headers=["word", "concrete", "symbolic", "note"], tablefmt="simple"))
    return ok


# ── 3. Лестница редуцированности ─────────────────────────────────────

def check_ladder(args) -> bool:
    rows, ok = [], True
    for n in (3, 4, 5):
        a = Word.power("t", -1) * make_u(n, 1).word
        try:
            cyc = is_cyclically_n_reduced(a, tower(n)) and is_cyclically_n_reduced(a.inverse(), tower(n))
            steps = [is_n_reduced(make_u(n, m + 1).word, tower(n - m)) for m in range(n)]
        except BudgetExceededError as e:
            if n <= 4:
                ok = False
            rows.append((n, "budget", str(e)))
            continue
        good = cyc and all(steps)
        ok &= good
        rows.append((n, cyc, " ".join("✓" if s else "✗" for s in steps)))
    a6 = Word.power("t", -1) * make_u(6, 1, symbolic=True).word
    sym = is_cyclically_n_reduced(a6, TowerSum.tower(6), SYMBOLIC_GERSTEN)
    ok &= sym
    rows.append(("6 (symbolic)", sym, ""))
    print(tabulate(rows, headers=["n", "cyclic", "u_{n,m+1} E_{n-m}-reduced"], tablefmt="simple"))
    return ok


# ── 4. C'(1/6) ───────────────────────────────────────────────────────

def check_c_prime(args) -> bool:
    rows, ok = [], True
    results = {}
    deadline = time.perf_counter() + args.check_seconds
    plan = [(4, False), (5, False)] + [(n, True) for n in range(4, 13)]
    for n, symbolic in plan:
        if time.perf_counter() > deadline:
            rows.append((n, symbolic, "skipped", "", "", f"over {args.check_seconds}s"))
            ok = False
            continue
        started = time.perf_counter()
        try:
            cert = verify_c_prime(family_symmetrized_set(n, symbolic), Fraction(1, 6))
        except BudgetExceededError as e:
            rows.append((n, symbolic, "budget", "", "", str(e)))
            ok = False
            continue
        got = (cert.verdict, cert.max_piece_t, cert.relator_t)
        results[(n, symbolic)] = got
        good = got == (True, 4, 25)
        ok &= good
        rows.append((n, symbolic, *got, f"{time.perf_counter() - started:.1f}s"))
    for n in (4, 5):
        if (n, False) in results and results[(n, False)] != results.get((n, True)):
            logger.warning(f"concrete and symbolic certificates differ at n={n}")
            ok = False
    print(tabulate(rows, headers=["n", "symbolic", "verdict", "max piece", "relator_t", "time"],
                   tablefmt="simple"))
    return ok


# ── 5. Площадь ───────────────────────────────────────────────────────

def check_area(args) -> bool:
    rows, ok = [], True
    mu0 = make_mu0()
    bs = parse_presentation("gens: x y\nrel: Y x y X^2")
    cases = [
        ("R0 over mu_0", R0, mu0, 1),
        ("R1 over mu_0", R1, mu0, 1),
        ("Y^2 x y^2 X^4 over BS", parse_word("Y^2 x y^2 X^4"), bs, 3),
    ]
    for name, w, p, exp in cases:
        got = min_area(AreaQuery(w, p, max_area=8, max_len=64, time_limit=args.search_seconds))
        ok &= got == exp
        rows.append((name, got, exp))

    rep = area_w1(node_limit=args.node_limit, time_limit=args.search_seconds)
    above = (rep.status == FOUND and rep.area > 2) or (rep.status != FOUND and rep.lower_bound > 2)
    ok &= above
    rows.append(("w_1 over mu_0", str(rep), f"> 2 (lower {rep.lower_bound}, upper {rep.upper_bound})"))
    print(tabulate(rows, headers=["word", "area", "expected"], tablefmt="simple"))
    return ok


# ── 6. Конверсия ─────────────────────────────────────────────────────

def check_conversion(args) -> bool:
    rows, ok = [], True
    for n in (2, 3, 4, 5, 6):
        cost = conversion_cost(n)
        ok &= cost.within_bound
        total = cost.total if cost.total.bit_length() <= 64 else f"<{cost.total.bit_length()}-bit>"
        bound = cost.bound if cost.bound.bit_length() <= 64 else f"<{cost.bound.bit_length()}-bit>"
        rows.append((n, total, bound, cost.within_bound))
    cert = conversion_certificate(2)
    valid = check_certificate(cert, make_mu0())
    ok &= valid and cert.size == conversion_cost(2).total
    print(tabulate(rows, headers=["n", "cost", "96*E_{n-1}", "within"], tablefmt="simple"))
    print(f"certificate n=2: {cert.size} terms, valid={valid}")
    return ok


# ── 7. Op4 и площадь ─────────────────────────────────────────────────

def _random_relator(rng: random.Random, gens) -> Word:
    while True:
        size = rng.randint(2, 4)
        w = Word.from_blocks((rng.choice(gens), rng.choice((1, -1))) for _ in range(size))
        w = cyclic_reduce(w)
        if not w.is_empty():
            return w


def _random_trivial(rng: random.Random, p: Presentation, gens) -> Word:
    w = Word.empty()
    for _ in range(rng.randint(1, 2)):
        z = Word.from_blocks((rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randint(0, 2)))
        r = p.relator_word(rng.randrange(len(p.relators)))
        if rng.random() < 0.5:
            r = r.inverse()
        w = w * z * r * z.inverse()
    return w


def check_op4(args) -> bool:
    rng = random.Random(Config.RANDOM_SEED)
    gens = ("x", "y")
    deadline = time.perf_counter() + args.check_seconds
    checked = skipped = bad = 0
    attempts = 0
    while checked < args.trials and attempts < 10 * args.trials:
        if time.perf_counter() > deadline:
            logger.warning(f"op4: check time {args.check_seconds}s spent after {attempts} presentations")
            break
        attempts += 1
        p = Presentation.from_words(gens, [_random_relator(rng, gens), _random_relator(rng, gens)])
        w = _random_trivial(rng, p, gens)
        i, j = rng.sample(range(2), 2)
        moved = apply_move(p, TietzeMove("op4", i=i, j=j))
        before = area_search(AreaQuery(w, p, max_area=6, max_len=24, node_limit=20000, time_limit=2))
        after = area_search(AreaQuery(w, moved, max_area=12, max_len=32, node_limit=20000, time_limit=2))
        if not (before.status == FOUND and before.exact and after.status == FOUND and after.exact):
            skipped += 1
            continue
        checked += 1
        if not (after.area * 2 >= before.area and before.area * 2 >= after.area):
            bad += 1
            logger.warning(f"presentation {attempts}: {p} / op4({i},{j}): area {before.area} -> {after.area}")
    print(f"op4: {checked}/{args.trials} terminating trials, {skipped} skipped, {bad} violations")
    return bad == 0 and checked == args.trials


# ── 8. Диаграммы ─────────────────────────────────────────────────────

def check_diagrams(args) -> bool:
    rows, ok = [], True

    fx = baum(3)
    bands = trace_bands(fx.diagram, fx.presentation, fx.h_relators)
    good = [(b.length, b.is_ring) for b in bands] == [(3, False)]
    ok &= good
    rows.append(("baum", f"{len(bands)} band(s) of {bands[0].length if bands else 0}", good))

    fx = cable()
    bands = trace_bands(fx.diagram, fx.presentation, fx.h_relators)
    cables = group_cables(fx.diagram, fx.presentation, bands, fx.h_relators)
    good = (len(bands), len(cables)) == (4, 3)
    ok &= good
    rows.append(("cable", f"{len(bands)} bands, {len(cables)} cables", good))

    for name, fx, maximal, needle in (
        ("L1", loop_l1(), True, "1 edge"),
        ("L2 (single bands)", parallel_l2(), False, "2 edges"),
    ):
        audit = euler_audit(fx.diagram, fx.presentation, maximal=maximal, h_relators=fx.h_relators)
        violations = [v for c in audit.components for v in c.violations]
        good = any(needle in v for v in violations)
        ok &= good
        rows.append((name, "; ".join(violations) or "none", good))
    print(tabulate(rows, headers=["fixture", "result", "ok"], tablefmt="simple"))
    return ok


# ── 9. Отрицательная проверка ────────────────────────────────────────

def check_negative(args) -> bool:
    rep = area_search(AreaQuery(parse_word("x"), make_mu(5), max_area=4, max_len=64,
                                node_limit=args.node_limit, time_limit=args.search_seconds))
    print(f"x over mu_5: {rep} (expanded {rep.expanded}); not a proof of nontriviality")
    return rep.status != FOUND


CHECKS = {
    1: ("family lengths",         check_lengths),
    2: ("triviality in G",        check_trivial),
    3: ("reducedness ladder",     check_ladder),
    4: ("C'(1/6) certificate",    check_c_prime),
    5: ("area oracle",            check_area),
    6: ("conversion cost",        check_conversion),
    7: ("op4 area ledger",        check_op4),
    8: ("diagram audit",          check_diagrams),
    9: ("bounded negative check", check_negative),
}


def main() -> int:
    parser = argparse.ArgumentParser(description="acceptance checks")
    parser.add_argument("--only", type=int, nargs="*", choices=sorted(CHECKS))
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--node-limit", type=int, default=Config.ACCEPT_NODE_LIMIT)
    parser.add_argument("--search-seconds", type=float, default=Config.ACCEPT_SEARCH_SECONDS)
    parser.add_argument("--check-seconds", type=float, default=Config.ACCEPT_CHECK_SECONDS)
    args = parser.parse_args()

    summary = []
    for key in args.only or sorted(CHECKS):
        title, fn = CHECKS[key]
        print(f"\n{'═' * 55}\n{key}. {title}")
        started = time.perf_counter()
        try:
            ok = fn(args)
        except Exception as e:
            logger.exception(f"check {key} crashed: {e}")
            ok = False
        summary.append((key, title, "✅" if ok else "❌", f"{time.perf_counter() - started:.1f}s"))

    print()
    print(tabulate(summary, headers=["#", "check", "result", "time"], tablefmt="simple"))
    return 0 if all(row[2] == "✅" for row in summary) else 1


if __name__ == "__main__":
    raise SystemExit(main())
