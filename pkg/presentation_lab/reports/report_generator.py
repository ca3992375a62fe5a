"""Отчёты CLI: каждая команда собирает dict со стабильными ключами,
build_text_report печатает его таблицами, to_json - для --json."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from tabulate import tabulate

from entities.errors import fmt_int
from entities.tower import TowerSum
from entities.word import Word
from utils.text_formats import format_letters, format_move, format_presentation, format_word


def _plain(value: Any) -> Any:
    if isinstance(value, Word):
        return format_word(value)
    if isinstance(value, (TowerSum, Fraction)):
        return str(value)
    if isinstance(value, int) and not isinstance(value, bool) and value.bit_length() > 64:
        return f"<{value.bit_length()}-bit integer>"
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def build_text_report(result: Dict) -> str:
    """Скалярные поля одной таблицей, списки словарей - отдельными таблицами."""
    result = _plain(result)
    lines = [result.get("title", "report")]
    scalars = [
        (k, v) for k, v in result.items()
        if k != "title" and not isinstance(v, (list, dict))
    ]
    if scalars:
        lines.append(tabulate(scalars, tablefmt="plain"))
    for key, value in result.items():
        if isinstance(value, dict):
            lines.append(f"\n{key}:")
            lines.append(tabulate(list(value.items()), tablefmt="plain"))
        elif isinstance(value, list):
            if value and all(isinstance(v, dict) for v in value):
                lines.append(f"\n{key}:")
                lines.append(tabulate(value, headers="keys", tablefmt="simple"))
            elif value:
                lines.append(f"\n{key}:")
                lines.extend(f"  {v}" for v in value)
    return "\n".join(lines)


def to_json(result: Dict) -> str:
    return json.dumps(_plain(result), ensure_ascii=False, indent=2)


# ── Слова и копредставления ──────────────────────────────────────────

def family_report(fw) -> Dict:
    return {
        "title":   f"{fw.kind}_{{{fw.n},{fw.m}}}",
        "kind":    fw.kind,
        "n":       fw.n,
        "m":       fw.m,
        "length":  fw.length(),
        "count_t": fw.count_t(),
        "word":    format_word(fw.word),
    }


def presentation_report(name: str, p) -> Dict:
    return {
        "title":        name,
        "generators":   list(p.generators),
        "relators":     [format_letters(r) for r in p.relators],
        "total_length": p.total_length(),
        "balanced":     p.is_balanced(),
    }


def wp_report(w: Word, trivial: bool, cost, reduced: str) -> Dict:
    return {
        "title":   "word problem in G",
        "word":    format_word(w),
        "verdict": "trivial" if trivial else "nontrivial",
        "cost":    cost,
        "reduced": reduced,
    }


def nreduced_report(w: Word, n, cyclic: bool, verdict: bool, pinches: Sequence) -> Dict:
    return {
        "title":   ("cyclically " if cyclic else "") + f"{fmt_int(n)}-reduced",
        "word":    format_word(w),
        "N":       n,
        "verdict": verdict,
        "pinches": [
            {"position": p.position, "direction": p.direction, "exponent": p.exponent, "cost": p.cost}
            for p in pinches
        ],
    }


# ── Small cancellation ───────────────────────────────────────────────

def _match_row(R, m) -> Dict:
    return {
        "r":        m.r,
        "r'":       m.r_prime,
        "rot":      m.start.rotation if m.start else None,
        "rot'":     m.start_prime.rotation if m.start_prime else None,
        "inv'":     m.start_prime.inverted if m.start_prime else None,
        "length_t": m.length_t,
        "initial":  str(m.initial) if m.initial else "-",
        "labels":   " ".join(fmt_int(v) for v in m.band_labels),
    }


def pieces_report(R, matches: Sequence) -> Dict:
    return {
        "title":   f"pieces, N = {fmt_int(R.n)}",
        "members": len(R),
        "pieces":  [_match_row(R, m) for m in matches if m.length_t > 0],
    }


def cprime_report(cert, R) -> Dict:
    return {
        "title":       f"C'({cert.lam}, {fmt_int(cert.n)})",
        "lambda":      cert.lam,
        "N":           cert.n,
        "relator_t":   cert.relator_t,
        "max_piece_t": cert.max_piece_t,
        "verdict":     cert.verdict,
        "window":      cert.window,
        "pairs":       cert.pairs,
        "witness":     [_match_row(R, cert.witness)] if cert.witness else [],
        "violations":  [_match_row(R, m) for m in cert.violations[:20]],
    }


def gap_report(rows) -> Dict:
    return {
        "title": "signature gaps",
        "gaps":  [{"from": a, "to": b, "t-letters": gap} for a, b, gap in rows],
    }


# ── Титце ────────────────────────────────────────────────────────────

def tietze_report(final, ledger, area_before: Optional[int] = None) -> Dict:
    report = {
        "title":        "tietze replay",
        "moves":        len(ledger.history),
        "op4":          ledger.op4_count,
        "area_factor":  ledger.factor,
        "presentation": format_presentation(final),
        "history":      [{"step": k, "move": format_move(mv)} for k, mv in enumerate(ledger.history)],
    }
    if area_before is not None:
        report["area_before"] = area_before
        report["area_after_lower_bound"] = ledger.area_lower_bound(area_before)
        report["op4_lower_bound"] = ledger.lower_bound_moves(area_before)
    return report


# ── Площадь ──────────────────────────────────────────────────────────

def area_search_report(w: Word, report) -> Dict:
    return {
        "title":       "area search",
        "word":        format_word(w),
        "status":      report.status,
        "area":        report.area,
        "exact":       report.exact,
        "lower_bound": report.lower_bound,
        "upper_bound": report.upper_bound,
        "expanded":    report.expanded,
        "pruned_len":  report.pruned_len,
        "heuristic0":  report.heuristic0,
        "summary":     str(report),
        "notes":       list(report.notes),
    }


def certificate_report(c, ok: bool) -> Dict:
    counts: Dict[str, int] = {}
    for _, idx, sign in c.terms:
        key = f"rel {idx} sign {sign:+d}"
        counts[key] = counts.get(key, 0) + 1
    return {
        "title":  "certificate",
        "word":   format_word(c.word),
        "terms":  c.size,
        "valid":  ok,
        "usage":  [{"relator": k, "count": v} for k, v in sorted(counts.items())],
    }


def conversion_report(cost) -> Dict:
    return {
        "title":        f"conversion cost n = {cost.n}",
        "total":        cost.total,
        "bound":        cost.bound,
        "within_bound": cost.within_bound,
        "levels":       [{"m": m, "applications": c} for m, c in cost.per_level],
    }


# ── Диаграммы ────────────────────────────────────────────────────────

def validation_report(rep) -> Dict:
    return {
        "title":      "diagram validation",
        "valid":      rep.valid,
        "vertices":   rep.vertices,
        "edges":      rep.edges,
        "faces":      rep.faces,
        "violations": list(rep.violations),
    }


def bands_report(bands) -> Dict:
    return {
        "title": "t-bands",
        "count": len(bands),
        "rings": sum(1 for b in bands if b.is_ring),
        "bands": [
            {
                "band":   k,
                "length": b.length,
                "ring":   b.is_ring,
                "cells":  " ".join(map(str, b.cells)) or "-",
                "ends":   " ".join(f"{f}:{x}" for f, x in b.ends) or "-",
            }
            for k, b in enumerate(bands)
        ],
    }


def cables_report(cables) -> Dict:
    return {
        "title":  "t-cables",
        "count":  len(cables),
        "cables": [
            {
                "cable": k,
                "bands": " ".join(map(str, c.bands)),
                "from":  c.ends[0][0],
                "to":    c.ends[1][0],
            }
            for k, c in enumerate(cables)
        ],
    }


def dual_report(dual) -> Dict:
    return {
        "title": "dual graph",
        "V":     dual.V,
        "E":     dual.E,
        "faces": [
            {"face": k, "size": f.size, "outer": f.outer, "touches": " ".join(map(str, sorted(f.touches))) or "-"}
            for k, f in enumerate(dual.faces)
        ],
    }


def audit_report(report) -> Dict:
    rows: List[Dict] = []
    notes: List[str] = []
    for c in report.components:
        rows.append({
            "cells":      " ".join(map(str, c.cells)),
            "V":          c.V,
            "E":          c.E,
            "F":          c.F,
            "V-E+F":      c.euler,
            "min_face":   c.min_face if c.min_face is not None else "-",
            "min_degree": c.min_degree,
            "innermost":  c.innermost,
            "V-E/3":      str(c.v_minus_e3),
            "chain":      c.chain_fires,
        })
        notes.extend(f"[{' '.join(map(str, c.cells))}] {v}" for v in c.violations)
    return {
        "title":      "euler audit",
        "maximal":    report.maximal,
        "vacuous":    report.vacuous,
        "components": rows,
        "violations": notes,
    }
