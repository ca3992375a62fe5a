#!/usr/bin/env python3
import sys
import argparse
import logging
from fractions import Fraction
from pathlib import Path

from colorama import Fore, Style, init

from config.settings import Config
from entities.errors import (
    BudgetExceededError, InvalidMoveError, PresentationLabError, ShapeError,
    SymbolicRangeError, WordFormatError,
)
from entities.tower import TowerSum, collapse
from reports import report_generator as rg
from utils.text_formats import (
    format_certificate, format_diagram, format_presentation, format_script, format_word,
    parse_certificate, parse_diagram, parse_presentation, parse_script, parse_word,
)

logger = logging.getLogger(__name__)

EXIT = Config.EXIT_CODES


# ── Ввод ─────────────────────────────────────────────────────────────

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _word_arg(args):
    if args.word is not None:
        return parse_word(args.word)
    if args.file:
        return parse_word(" ".join(_read(args.file).split()))
    raise WordFormatError("give a word argument or --file")


def _exponent(text: str):
    """`5`, `-3` или `E5`."""
    text = text.strip()
    if text.startswith("E"):
        return collapse(TowerSum.tower(int(text[1:])))
    return int(text)


def _lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise WordFormatError(f"lambda must be p/q, got {text!r}") from e


# ── Команды ──────────────────────────────────────────────────────────

def cmd_gen(args):
    from models.relator_factory import (
        make_a, make_mu, make_mu0, make_u, make_w, two_relator_presentation,
    )
    kind = args.kind
    if kind in ("u", "w"):
        m = args.n if args.m is None else args.m
        maker = make_u if kind == "u" else make_w
        fw = maker(args.n, m, symbolic=args.symbolic)
        return rg.family_report(fw), format_word(fw.word), True
    if kind == "a":
        fw = make_a(args.n)
        return rg.family_report(fw), format_word(fw.word), True
    if kind == "mu0":
        p = make_mu0()
    elif kind == "mu":
        p = make_mu(args.n)
    else:
        p = two_relator_presentation(args.n)
    return rg.presentation_report(f"{kind} {args.n}", p), format_presentation(p), True


def cmd_wp(args):
    from analyzers.hnn_britton import BAUMSLAG_GERSTEN, SYMBOLIC_GERSTEN, britton_reduce, format_sequence
    w = _word_arg(args)
    spec = SYMBOLIC_GERSTEN if args.symbolic else BAUMSLAG_GERSTEN
    reduced, cost = britton_reduce(w, spec)
    trivial = reduced.is_identity()
    report = rg.wp_report(w, trivial, cost, format_sequence(reduced))
    return report, report["verdict"], trivial


def cmd_nreduced(args):
    from analyzers.hnn_britton import (
        BAUMSLAG_GERSTEN, SYMBOLIC_GERSTEN, cyclic_pinches, find_pinches,
        is_cyclically_n_reduced, is_n_reduced, parse_sequence,
    )
    w = _word_arg(args)
    n = _exponent(args.N)
    spec = SYMBOLIC_GERSTEN if args.symbolic else BAUMSLAG_GERSTEN
    s = parse_sequence(w, spec)
    if args.cyclic:
        verdict = is_cyclically_n_reduced(w, n, spec)
        pinches = cyclic_pinches(s, spec)
    else:
        verdict = is_n_reduced(w, n, spec)
        pinches = find_pinches(s, spec)
    report = rg.nreduced_report(w, n, args.cyclic, verdict, pinches)
    return report, str(verdict).lower(), verdict


def cmd_pieces(args):
    from analyzers.small_cancel import family_symmetrized_set, hand_gap_table, max_piece
    if args.gaps:
        report = rg.gap_report(hand_gap_table(args.n, args.symbolic))
        return report, None, True
    R = family_symmetrized_set(args.n, args.symbolic)
    matches = [max_piece(R, i, j, args.window) for i in range(len(R)) for j in range(len(R))]
    return rg.pieces_report(R, matches), None, True


def cmd_cprime(args):
    from analyzers.small_cancel import family_symmetrized_set, verify_c_prime
    R = family_symmetrized_set(args.n, args.symbolic)
    cert = verify_c_prime(R, _lambda(args.lam), window=args.window)
    report = rg.cprime_report(cert, R)
    return report, f"verdict {str(cert.verdict).lower()}", cert.verdict


def cmd_tietze(args):
    from models.relator_factory import make_mu
    from models.tietze_engine import eliminate_y, replay
    if args.eliminate_y is not None:
        final, script = eliminate_y(make_mu(args.eliminate_y))
        report = rg.presentation_report(f"mu_{args.eliminate_y} without y", final)
        report["moves"] = len(script)
        return report, format_script(script) + "\n\n" + format_presentation(final), True
    if not args.presentation or not args.script:
        raise WordFormatError("tietze needs PRESENTATION and SCRIPT files, or --eliminate-y I")
    p = parse_presentation(_read(args.presentation))
    script = parse_script(_read(args.script))
    try:
        final, ledger = replay(p, script)
    except InvalidMoveError as e:
        return {"title": "tietze replay", "error": str(e), "step": e.step}, str(e), False
    report = rg.tietze_report(final, ledger, args.area_before)
    return report, format_presentation(final), True


def cmd_area(args):
    from analyzers.area_oracle import AreaQuery, FOUND, area_search, area_w1, check_certificate
    if args.w1:
        result = area_w1(args.max_area, args.max_len, args.node_limit)
        from models.relator_factory import make_w
        report = rg.area_search_report(make_w(1, 1).word, result)
        return report, str(result), result.status == FOUND
    if not args.presentation:
        raise WordFormatError("area needs a PRESENTATION file (or --w1)")
    p = parse_presentation(_read(args.presentation))
    if args.cert:
        c = parse_certificate(_read(args.cert), parse_word(args.word) if args.word else None)
        ok = check_certificate(c, p)
        return rg.certificate_report(c, ok), "valid" if ok else "invalid", ok
    w = _word_arg(args)
    q = AreaQuery(
        w, p,
        max_area=args.max_area or Config.AREA_MAX,
        max_len=args.max_len or Config.AREA_MAX_LEN,
        node_limit=args.node_limit or Config.AREA_NODE_LIMIT,
    )
    result = area_search(q)
    return rg.area_search_report(w, result), str(result), result.status == FOUND


def cmd_cert(args):
    from analyzers.area_oracle import check_certificate
    from models.relator_factory import (
        conversion_certificate, conversion_cost, make_mu0, trivialization_certificate,
    )
    if args.trivialize:
        c = trivialization_certificate(args.trivialize, args.n)
    elif args.cost_only:
        cost = conversion_cost(args.n)
        return rg.conversion_report(cost), None, cost.within_bound
    else:
        c = conversion_certificate(args.n)
    ok = check_certificate(c, make_mu0())
    return rg.certificate_report(c, ok), format_certificate(c), ok


def _diagram_input(args):
    from diagrams.fixtures import FIXTURES
    if args.fixture:
        if args.fixture not in FIXTURES:
            raise WordFormatError(f"unknown fixture {args.fixture!r}, have {sorted(FIXTURES)}")
        fx = FIXTURES[args.fixture]()
        return fx.presentation, fx.diagram, fx.h_relators
    if not args.file or not args.presentation:
        raise WordFormatError("diagram needs --fixture or both --file and --presentation")
    h = None if args.h is None else tuple(int(v) for v in args.h.split(",") if v)
    return parse_presentation(_read(args.presentation)), parse_diagram(_read(args.file)), h


def cmd_diagram(args):
    from diagrams.bands import group_cables, trace_bands
    from diagrams.diagram import validate
    from diagrams.dual import build_dual, euler_audit, to_dot
    p, d, h = _diagram_input(args)
    action = args.action
    if action == "validate":
        rep = validate(d, p)
        return rg.validation_report(rep), format_diagram(d) if args.show else None, rep.valid
    if action == "bands":
        return rg.bands_report(trace_bands(d, p, h)), None, True
    if action == "cables":
        cables = group_cables(d, p, trace_bands(d, p, h), h)
        return rg.cables_report(cables), None, True
    if action == "dual":
        dual = build_dual(d, p, maximal=not args.no_maximal, h_relators=h)
        return rg.dual_report(dual), to_dot(dual) if args.dot else None, True
    report = euler_audit(d, p, maximal=not args.no_maximal, h_relators=h)
    extra = to_dot(report.dual) if args.dot else None
    return rg.audit_report(report), extra, True


COMMANDS = {
    "gen":      cmd_gen,
    "wp":       cmd_wp,
    "nreduced": cmd_nreduced,
    "pieces":   cmd_pieces,
    "cprime":   cmd_cprime,
    "tietze":   cmd_tietze,
    "area":     cmd_area,
    "cert":     cmd_cert,
    "diagram":  cmd_diagram,
}


# ── Разбор аргументов ────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Balanced presentations of the trivial group")
    parser.add_argument("--json",      action="store_true", help="Отчёт в JSON")
    parser.add_argument("--no-color",  action="store_true")
    parser.add_argument("--log-level", default=Config.LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="u_{n,m}, w_{n,m}, a_n, mu_i, mu_0, mu_i без y")
    g.add_argument("kind", choices=["u", "w", "a", "mu", "mu0", "two"])
    g.add_argument("--n", type=int, default=1)
    g.add_argument("--m", type=int)
    g.add_argument("--symbolic", action="store_true")

    for name in ("wp", "nreduced"):
        s = sub.add_parser(name)
        s.add_argument("word", nargs="?")
        s.add_argument("--file")
        s.add_argument("--symbolic", action="store_true")
        if name == "nreduced":
            s.add_argument("--N", required=True, help="целое или E<k>")
            s.add_argument("--cyclic", action="store_true")

    for name in ("pieces", "cprime"):
        s = sub.add_parser(name)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--symbolic", action="store_true")
        s.add_argument("--window", type=int, default=Config.BAND_WINDOW)
        if name == "cprime":
            s.add_argument("--lambda", dest="lam", default="1/6")
        else:
            s.add_argument("--gaps", action="store_true")

    t = sub.add_parser("tietze")
    t.add_argument("presentation", nargs="?")
    t.add_argument("script", nargs="?")
    t.add_argument("--eliminate-y", type=int, metavar="I")
    t.add_argument("--area-before", type=int)

    a = sub.add_parser("area")
    a.add_argument("presentation", nargs="?")
    a.add_argument("--word")
    a.add_argument("--file")
    a.add_argument("--cert")
    a.add_argument("--w1", action="store_true")
    a.add_argument("--max-area", type=int)
    a.add_argument("--max-len", type=int)
    a.add_argument("--node-limit", type=int)

    c = sub.add_parser("cert")
    c.add_argument("--n", type=int, default=2)
    c.add_argument("--trivialize", choices=["u", "w"])
    c.add_argument("--cost-only", action="store_true")

    d = sub.add_parser("diagram")
    d.add_argument("action", choices=["validate", "bands", "cables", "dual", "audit"])
    d.add_argument("--fixture")
    d.add_argument("--file")
    d.add_argument("--presentation")
    d.add_argument("--h", help="индексы соотношений mu_H через запятую")
    d.add_argument("--no-maximal", action="store_true")
    d.add_argument("--dot", action="store_true")
    d.add_argument("--show", action="store_true")
    return parser


def _fail(args, e: Exception) -> None:
    text = f"❌ {e}"
    print(text if args.json else f"{Fore.RED}{text}{Style.RESET_ALL}", file=sys.stderr)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT["usage"] if e.code else EXIT["true"]

    # --json: stdout остаётся чистым JSON, colorama не оборачивает потоки
    if not args.json:
        init(autoreset=True, strip=True if args.no_color else None)
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING))

    try:
        report, extra, verdict = COMMANDS[args.command](args)
    except (BudgetExceededError, SymbolicRangeError) as e:
        _fail(args, e)
        return EXIT["budget"]
    except (WordFormatError, ShapeError, InvalidMoveError, OSError) as e:
        _fail(args, e)
        return EXIT["usage"]
    except PresentationLabError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT["usage"]
    except Exception as e:
        logger.exception(f"{args.command}: unexpected error: {e}")
        return EXIT["usage"]

    if args.json:
        print(rg.to_json(report))
    else:
        print(f"\n{Fore.CYAN}{'═'*55}")
        print(f"  {report.get('title', args.command)}")
        print(f"{'═'*55}{Style.RESET_ALL}\n")
        print(rg.build_text_report(report))
        if extra:
            print()
            print(extra)
        color = Fore.GREEN if verdict else Fore.RED
        print(f"\n  {color}{'✅' if verdict else '❌'} {args.command}{Style.RESET_ALL}\n")
    return EXIT["true"] if verdict else EXIT["false"]


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
