"""Запуск: python -m utils.test_text_formats"""

from analyzers.area_oracle import AreaCertificate
from entities.errors import WordFormatError
from entities.presentation import Presentation, TietzeMove
from entities.tower import TowerSum
from entities.word import Letter, Word
from models.relator_factory import R0
from utils.text_formats import (
    format_letters, format_move, format_presentation, format_script, format_word,
    parse_certificate, parse_letters, parse_move, parse_presentation, parse_script, parse_word,
)


def run_tests() -> bool:
    # (вход, ожидаемый вывод format_word)
    word_cases = [
        ("Y^16 x y^16",      "Y^16 x y^16"),
        ("x^3 X",            "x^2"),
        ("x y Y X",          "1"),
        ("",                 "1"),
        ("x^-3",             "X^3"),
        ("y^E5 x Y^E5",      "y^E5 x Y^E5"),
        ("y^E3",             "y^E3"),
        ("y^E2",             "y^4"),
        ("x_2 X_2 x_3",      "x_3"),
    ]

    letters_cases = [
        ("x^2 X",            (Letter("x"), Letter("x"), Letter("x", -1))),
        ("T x t",            (Letter("t", -1), Letter("x"), Letter("t"))),
        ("1",                ()),
    ]

    format_letters_cases = [
        ("x X x",            "x X x"),
        ("x^3 Y",            "x^3 Y"),
        ("",                 "1"),
    ]

    bad_words = ["x^0", "q", "x^", "x^-E", "xy", "x^2.5"]

    move_cases = [
        ("op4 i=0 j=2",        TietzeMove("op4", i=0, j=2)),
        ("op1 i=1 pos=3 gen=y sign=-1", TietzeMove("op1", i=1, pos=3, gen="y", sign=-1)),
        ("op1inv i=0 pos=2",   TietzeMove("op1inv", i=0, pos=2)),
        ("op2 i=1 rot=5",      TietzeMove("op2", i=1, rot=5)),
        ("op3 i=0",            TietzeMove("op3", i=0)),
        ('op5 word="x Y"',     TietzeMove("op5", word=(Letter("x"), Letter("y", -1)))),
        ("op5",                TietzeMove("op5")),
        ("op5inv gen=x_2",     TietzeMove("op5inv", gen="x_2")),
        ("op5inv gen=y extended=1", TietzeMove("op5inv", gen="y", extended=True)),
    ]

    bad_moves = ["", "op9 i=0", "op4 k=1", "op4 i=a j=1", "op3 0", 'op5 word="x', "op1 i=0 pos=0 gen=x sign=x",
                 "op5inv gen=y extended=2", "op4 i=0 j=1 extended=1"]

    total = passed = 0

    for raw, exp in word_cases:
        total += 1
        got = format_word(parse_word(raw))
        if got == exp:
            passed += 1
        else:
            print(f"FAIL format_word: {raw!r} -> {got!r}, expected {exp!r}")

    total += 1
    w = parse_word("y^E6")
    if w.blocks == (("y", TowerSum.tower(6)),) and format_word(parse_word("Y^E6")) == "Y^E6":
        passed += 1
    else:
        print(f"FAIL symbolic token: y^E6 -> {w.blocks!r}")

    for raw, exp in letters_cases:
        total += 1
        got = parse_letters(raw)
        if got == exp:
            passed += 1
        else:
            print(f"FAIL parse_letters: {raw!r} -> {got!r}, expected {exp!r}")

    for raw, exp in format_letters_cases:
        total += 1
        got = format_letters(parse_letters(raw))
        if got == exp:
            passed += 1
        else:
            print(f"FAIL format_letters: {raw!r} -> {got!r}, expected {exp!r}")

    for raw in bad_words:
        total += 1
        try:
            parse_word(raw)
            print(f"FAIL parse_word: {raw!r} accepted")
        except WordFormatError:
            passed += 1

    # копредставления
    total += 1
    text = "# mu_0\ngens: x y t\nrel: Y x y X^2   # R0\n\nrel: T x t Y\n"
    p = parse_presentation(text)
    if p.generators == ("x", "y", "t") and p.relators[0] == R0.letters() and len(p.relators) == 2:
        passed += 1
    else:
        print(f"FAIL parse_presentation: -> {p}")

    total += 1
    got = format_presentation(p)
    exp = "gens: x y t\nrel: Y x y X^2\nrel: T x t Y"
    if got == exp and parse_presentation(got) == p:
        passed += 1
    else:
        print(f"FAIL format_presentation: -> {got!r}, expected {exp!r}")

    total += 1
    raw_pair = parse_presentation("gens: x\nrel: x X x")
    if len(raw_pair.relators[0]) == 3:
        passed += 1
    else:
        print("FAIL parse_presentation: inverse pair was cancelled")

    bad_presentations = [
        "rel: x",
        "gens: x\ngens: y",
        "gens: x\nfoo: x",
        "gens: x q",
        "gens: x\nrel: y",
        "gens: x x",
        "gens: x\nx",
    ]
    for raw in bad_presentations:
        total += 1
        try:
            parse_presentation(raw)
            print(f"FAIL parse_presentation: {raw!r} accepted")
        except WordFormatError:
            passed += 1

    total += 1
    if parse_presentation("gens:") == Presentation():
        passed += 1
    else:
        print("FAIL parse_presentation: 'gens:' is not the empty presentation")

    # ходы Титце
    for raw, exp in move_cases:
        total += 1
        got = parse_move(raw)
        if got == exp and format_move(got) == raw:
            passed += 1
        else:
            print(f"FAIL parse_move: {raw!r} -> {got!r} / {format_move(got)!r}")

    for raw in bad_moves:
        total += 1
        try:
            parse_move(raw)
            print(f"FAIL parse_move: {raw!r} accepted")
        except WordFormatError:
            passed += 1

    total += 1
    script = parse_script("# trivialize <x|x>\nop3 i=0\n\nop5inv gen=x  # done\n")
    if script == [TietzeMove("op3", i=0), TietzeMove("op5inv", gen="x")] \
            and format_script(script) == "op3 i=0\nop5inv gen=x":
        passed += 1
    else:
        print(f"FAIL parse_script: -> {script!r}")

    # op4 без j разбирается, ошибка будет при применении
    total += 1
    script = parse_script("op3 i=0\nop4 i=0")
    if script[1] == TietzeMove("op4", i=0):
        passed += 1
    else:
        print(f"FAIL parse_script: op4 i=0 -> {script[1]!r}")

    total += 1
    try:
        parse_script("op3 i=0\nopX")
        print("FAIL parse_script: unknown move accepted")
    except WordFormatError as e:
        if "line 2" in str(e):
            passed += 1
        else:
            print(f"FAIL parse_script: error without line number: {e}")

    # сертификаты
    total += 1
    c = parse_certificate('word: Y x y X^2\nconj="1" rel=0 sign=+1\n')
    if c == AreaCertificate(R0, ((Word.empty(), 0, 1),)):
        passed += 1
    else:
        print(f"FAIL parse_certificate: -> {c!r}")

    total += 1
    c = parse_certificate('conj="t x" rel=1 sign=-1', word=R0)
    if c.word == R0 and c.terms == ((parse_word("t x"), 1, -1),):
        passed += 1
    else:
        print(f"FAIL parse_certificate with word: -> {c!r}")

    bad_certificates = [
        'conj="1" rel=0 sign=+1',
        'word: x\nconj="1" rel=0 sign=2',
        'word: x\nconj="1" rel=a sign=+1',
        'word: x\nconj="1" sign=+1',
        'word: x\nrel',
    ]
    for raw in bad_certificates:
        total += 1
        try:
            parse_certificate(raw)
            print(f"FAIL parse_certificate: {raw!r} accepted")
        except WordFormatError:
            passed += 1

    failed = total - passed
    if failed == 0:
        print(f"OK: {total} tests passed")
        return True
    print(f"FAILED: {failed}/{total}")
    return False


if __name__ == "__main__":
    raise SystemExit(0 if run_tests() else 1)
