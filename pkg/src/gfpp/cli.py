"""Command-line orchestration: sweeps, identity grids, girth scans, reports.

Commands emit a single JSON report on the data stream (stdout, or --json
PATH) and human-readable verdict lines on stderr.  Reports are
deterministic apart from the top-level "timing" entry; the exit status is
0 iff every verdict passes.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import itertools
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path

from . import __version__, criterion, graphs, permpoly
from .errors import GfppError, NotPrimeError
from .field import DEFAULT_FIELD_CAP, Field, is_prime, poly_str

UPPER_HALF_PRIMES = (3, 5, 7, 11, 13)
UPPER_HALF_X_RANGE = range(0, 5)
UPPER_HALF_Y_RANGE = range(1, 5)

CSV_COLUMNS = ("q", "k", "gcd_ok", "a_pp", "b_pp", "criterion", "k_prime",
               "k_prime_binary", "girth_class", "p_power")


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, e) with p prime and q = p^e; raises NotPrimeError
    when q is not a prime power."""
    if q < 2:
        raise NotPrimeError("q = %d is not a prime power" % q)
    p = q
    f = 2
    while f * f <= q:
        if q % f == 0:
            p = f
            break
        f += 1
    n, e = q, 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise NotPrimeError("q = %d is not a prime power" % q)
    return p, e


def odd_prime_powers(limit: int) -> list[int]:
    """All q = p^e <= limit with p an odd prime, ascending."""
    out = []
    for q in range(3, limit + 1):
        try:
            p, _ = factor_prime_power(q)
        except NotPrimeError:
            continue
        if p != 2:
            out.append(q)
    return out


@dataclass
class RunReport:
    """Serialized outcome of one CLI command; round-trips through JSON."""

    command: str
    params: dict
    modulus_by_q: dict
    rows: list
    verdicts: list
    overall: str
    version: str = __version__
    timing: dict = dataclass_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "modulus_by_q": self.modulus_by_q,
            "rows": self.rows,
            "verdicts": self.verdicts,
            "overall": self.overall,
            "version": self.version,
            "timing": self.timing,
        }

    def body(self) -> dict:
        """The deterministic part of the report (everything but timing)."""
        d = self.to_dict()
        d.pop("timing")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(command=d["command"], params=d["params"],
                   modulus_by_q=d["modulus_by_q"], rows=d["rows"],
                   verdicts=d["verdicts"], overall=d["overall"],
                   version=d.get("version", __version__),
                   timing=d.get("timing", {}))


# -- row/verdict helpers --------------------------------------------------

def _record_row(rec: permpoly.SweepRecord) -> dict:
    return {
        "kind": "sweep",
        "q": rec.q,
        "k": rec.k,
        "gcd_ok": rec.gcd_ok,
        "a_pp": rec.a_pp,
        "b_pp": rec.b_pp,
        "k_is_p_power": rec.k_is_p_power,
        "k_prime": rec.k_prime,
        "k_prime_binary": rec.k_prime_binary,
        "criterion": rec.criterion,
        "girth_ge_8": rec.girth_ge_8,
    }


def _verdict_dict(v: permpoly.ConjectureVerdict) -> dict:
    return {"section": "sweep", "q": v.q, "which": v.which,
            "witnesses": v.witnesses, "expected": v.expected, "passed": v.passed}


def _identity_grid(fld: Field) -> tuple[list[dict], dict]:
    """All (l, t, u, v) grid points of the support identity for one field.

    The u = v = 0 corner makes 2s = q-1, which empties the row sum (every
    C(i, 2s) with i <= q-2 vanishes) while the closed form's single
    a = b = 0 term is 1, so the displayed congruence cannot extend there.
    Those rows are flagged wrap=True and judged against their analyzed
    values (lhs = 0, rhs = 1) instead of against each other; all other
    points must match exactly.
    """
    p, e, q = fld.p, fld.e, fld.q
    h = (p - 1) // 2
    classes = sorted(
        sum(b * p**i for i, b in enumerate(bits))
        for bits in itertools.product((0, 1), repeat=e)
        if any(bits) and not all(bits)
    )
    rows = []
    mismatches = 0
    wrap_points = 0
    wrap_as_analyzed = True
    for l in classes:
        for t in range(1, e):
            x, y = criterion.xy_params(l, t, p, e)
            for u in range(h + 1):
                for v in range(h + 1):
                    lhs = criterion.support_identity_lhs(fld, l, t, u, v)
                    rhs = criterion.support_identity_rhs(p, x, y, u, v)
                    wrap = u == 0 and v == 0
                    match = lhs == rhs
                    if wrap:
                        wrap_points += 1
                        wrap_as_analyzed &= (lhs, rhs) == (0, 1)
                    else:
                        mismatches += not match
                    rows.append({"kind": "identity", "q": q, "l": l, "t": t,
                                 "u": u, "v": v,
                                 "s": (q - 1) // 2 - (u + v * p**t),
                                 "x": x, "y": y, "lhs": lhs, "rhs": rhs,
                                 "match": match, "wrap": wrap})
    verdict = {"section": "identities", "q": q, "points": len(rows),
               "wrap_points": wrap_points, "wrap_as_analyzed": wrap_as_analyzed,
               "mismatches": mismatches,
               "passed": mismatches == 0 and wrap_as_analyzed}
    return rows, verdict


def _upper_half_grid(p: int) -> tuple[list[dict], dict]:
    rows = []
    mismatches = 0
    for x in UPPER_HALF_X_RANGE:
        for y in UPPER_HALF_Y_RANGE:
            val = criterion.upper_half_sum(p, x, y)
            match = val == 1
            mismatches += not match
            rows.append({"kind": "upper_half", "p": p, "x": x, "y": y,
                         "value": val, "match": match})
    verdict = {"section": "upper_half", "p": p, "points": len(rows),
               "mismatches": mismatches, "passed": mismatches == 0}
    return rows, verdict


# -- worker tasks (top-level so they pickle for the process pool) ----------

def _sweep_task(task):
    q, with_criterion, with_girth, field_cap, girth_cap = task
    try:
        p, e = factor_prime_power(q)
        fld = Field(p, e, cap=field_cap)
        records = permpoly.sweep(fld, with_criterion=with_criterion,
                                 with_girth=with_girth, girth_cap=girth_cap)
    except (GfppError, ValueError) as exc:
        return {"q": q, "error": "%s: %s" % (type(exc).__name__, exc)}
    verdicts = [_verdict_dict(permpoly.conjecture_verdict(fld, w, records=records))
                for w in ("A", "B", "two")]
    return {"q": q, "modulus": list(fld.modulus),
            "rows": [_record_row(r) for r in records], "verdicts": verdicts}


def _identity_task(task):
    q, field_cap = task
    try:
        p, e = factor_prime_power(q)
        fld = Field(p, e, cap=field_cap)
    except (GfppError, ValueError) as exc:
        return {"q": q, "error": "%s: %s" % (type(exc).__name__, exc)}
    if fld.e < 3:
        return {"q": q, "skipped": "ParamDomain: e = %d < 3" % fld.e,
                "modulus": list(fld.modulus)}
    rows, verdict = _identity_grid(fld)
    return {"q": q, "modulus": list(fld.modulus), "rows": rows,
            "verdicts": [verdict]}


def _verify_task(task):
    q, field_cap, girth_cap = task
    p, e = factor_prime_power(q)
    fld = Field(p, e, cap=field_cap)
    rows: list = []
    verdicts: list = []

    records = permpoly.sweep(fld)
    rows.extend(_record_row(r) for r in records)
    for w in ("A", "B", "two"):
        verdicts.append(_verdict_dict(permpoly.conjecture_verdict(fld, w, records=records)))

    mismatch_ks = []
    for r in records:
        direct = r.a_pp
        c1 = criterion.pp_criterion(fld, r.k)
        c2 = criterion.inverse_pp_criterion(fld, r.k)
        if not (direct == c1 == c2):
            mismatch_ks.append(r.k)
            rows.append({"kind": "criterion_mismatch", "q": q, "k": r.k,
                         "direct": direct, "criterion": c1,
                         "inverse_criterion": c2})
    verdicts.append({"section": "criterion", "q": q, "checked": q - 1,
                     "mismatch_ks": mismatch_ks, "passed": not mismatch_ks})

    if e >= 3:
        id_rows, id_verdict = _identity_grid(fld)
        rows.extend(id_rows)
        verdicts.append(id_verdict)

    if q <= girth_cap:
        scan = graphs.girth_scan(fld, cap=girth_cap, records=records)
        passing = set(scan.passing)
        by_k = {r.k: r for r in records}
        rows.extend({"kind": "girth", "q": q, "k": k,
                     "girth_ge_8": k in passing, "a_pp": by_k[k].a_pp,
                     "b_pp": by_k[k].b_pp, "p_power": by_k[k].k_is_p_power}
                    for k in range(1, q))
        verdicts.append({"section": "girth", "q": q, "witnesses": scan.passing,
                         "expected": scan.expected,
                         "implication_ok": scan.implication_ok,
                         "passed": scan.passed})
    return {"q": q, "modulus": list(fld.modulus), "rows": rows,
            "verdicts": verdicts}


def _run_tasks(fn, specs, jobs):
    """Fan tasks out to a process pool; results come back in input order so
    the merged report is deterministic regardless of completion order."""
    if jobs <= 1 or len(specs) <= 1:
        return [fn(s) for s in specs]
    with ProcessPoolExecutor(max_workers=min(jobs, len(specs))) as pool:
        return list(pool.map(fn, specs))


# -- output ---------------------------------------------------------------

def _bool_cell(v) -> str:
    return "" if v is None else ("true" if v else "false")


def _write_csv(rows, path) -> None:
    """Sweep rows as flat CSV with a fixed column order; other row kinds are
    JSON-only."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            if r.get("kind") != "sweep":
                continue
            writer.writerow([
                r["q"], r["k"], _bool_cell(r["gcd_ok"]), _bool_cell(r["a_pp"]),
                _bool_cell(r["b_pp"]), _bool_cell(r["criterion"]),
                "" if r["k_prime"] is None else r["k_prime"],
                _bool_cell(r["k_prime_binary"]),
                "" if r["girth_ge_8"] is None else ("ge8" if r["girth_ge_8"] else "lt8"),
                _bool_cell(r["k_is_p_power"]),
            ])


def _emit(report: RunReport, args) -> None:
    payload = json.dumps(report.to_dict(), indent=2)
    if args.json:
        Path(args.json).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)
    if args.csv:
        _write_csv(report.rows, args.csv)
    for v in report.verdicts:
        status = "PASS" if v.get("passed") else "FAIL"
        where = ""
        if "q" in v:
            where = " q=%s" % v["q"]
        elif "p" in v:
            where = " p=%s" % v["p"]
        extra = " which=%s" % v["which"] if "which" in v else ""
        skipped = " (skipped: %s)" % v["skipped"] if v.get("skipped") else ""
        print("[%s] %s%s%s%s" % (status, v.get("section", report.command),
                                 where, extra, skipped), file=sys.stderr)
    print("[gfpp] %s: %s in %ss" % (report.command, report.overall,
                                    report.timing.get("seconds", "?")),
          file=sys.stderr)


# -- result cache ----------------------------------------------------------

def _with_cache(args, command, params, modulus_by_q, compute):
    """Append-only JSON cache keyed by (version, command, params, moduli)."""
    if not args.cache:
        return compute()
    key = {"version": __version__, "command": command, "params": params,
           "modulus_by_q": modulus_by_q}
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()
    path = Path(args.cache) / ("%s.json" % digest)
    if path.exists():
        report = RunReport.from_dict(json.loads(path.read_text(encoding="utf-8")))
        report.timing = {"cached": True}
        return report
    report = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(report.body(), indent=2) + "\n", encoding="utf-8")
    return report


def _moduli_for(qs, field_cap) -> dict:
    out = {}
    for q in qs:
        try:
            p, e = factor_prime_power(q)
            out[str(q)] = list(Field(p, e, cap=field_cap).modulus)
        except (GfppError, ValueError):
            pass
    return out


def _overall(verdicts, had_error: bool) -> str:
    ok = not had_error and all(v.get("passed") for v in verdicts)
    return "pass" if ok else "fail"


# -- commands ---------------------------------------------------------------

def cmd_sweep(args) -> RunReport:
    qs = sorted(set(args.q))
    params = {"q": qs, "which": args.which, "with_criterion": args.with_criterion,
              "with_girth": args.with_girth, "field_cap": args.field_cap,
              "girth_cap": args.girth_cap}
    modulus_by_q = _moduli_for(qs, args.field_cap)

    def compute() -> RunReport:
        specs = [(q, args.with_criterion, args.with_girth, args.field_cap,
                  args.girth_cap) for q in qs]
        rows: list = []
        verdicts: list = []
        had_error = False
        for res in _run_tasks(_sweep_task, specs, args.jobs):
            if "error" in res:
                had_error = True
                rows.append({"kind": "error", "q": res["q"], "error": res["error"]})
                verdicts.append({"section": "sweep", "q": res["q"],
                                 "error": res["error"], "passed": False})
                continue
            rows.extend(res["rows"])
            verdicts.extend(v for v in res["verdicts"] if v["which"] == args.which)
        return RunReport("sweep", params, modulus_by_q, rows, verdicts,
                         _overall(verdicts, had_error))

    return _with_cache(args, "sweep", params, modulus_by_q, compute)


def cmd_identities(args) -> RunReport:
    qs = sorted(set(args.q or []))
    ps = sorted(set(args.p or []))
    params = {"q": qs, "p": ps, "field_cap": args.field_cap}
    modulus_by_q = _moduli_for(qs, args.field_cap)

    def compute() -> RunReport:
        rows: list = []
        verdicts: list = []
        had_error = False
        specs = [(q, args.field_cap) for q in qs]
        for res in _run_tasks(_identity_task, specs, args.jobs):
            if "error" in res:
                had_error = True
                rows.append({"kind": "error", "q": res["q"], "error": res["error"]})
                verdicts.append({"section": "identities", "q": res["q"],
                                 "error": res["error"], "passed": False})
            elif "skipped" in res:
                verdicts.append({"section": "identities", "q": res["q"],
                                 "skipped": res["skipped"], "passed": True})
            else:
                rows.extend(res["rows"])
                verdicts.extend(res["verdicts"])
        for p in ps:
            if not is_prime(p) or p == 2:
                had_error = True
                rows.append({"kind": "error", "p": p,
                             "error": "NotPrimeError: p = %d is not an odd prime" % p})
                verdicts.append({"section": "upper_half", "p": p, "passed": False})
                continue
            uh_rows, uh_verdict = _upper_half_grid(p)
            rows.extend(uh_rows)
            verdicts.append(uh_verdict)
        return RunReport("identities", params, modulus_by_q, rows, verdicts,
                         _overall(verdicts, had_error))

    return _with_cache(args, "identities", params, modulus_by_q, compute)


def cmd_girth(args) -> RunReport:
    q = args.q
    if args.k is not None:
        f_exps, g_exps = (1, 1), (args.k, 2 * args.k)
    else:
        a, b, c, d = args.exps
        f_exps, g_exps = (a, b), (c, d)
    params = {"q": q, "k": args.k, "f_exps": list(f_exps), "g_exps": list(g_exps),
              "field_cap": args.field_cap, "girth_cap": args.girth_cap}

    def compute() -> RunReport:
        try:
            p, e = factor_prime_power(q)
            fld = Field(p, e, cap=args.field_cap)
        except (GfppError, ValueError) as exc:
            err = "%s: %s" % (type(exc).__name__, exc)
            return RunReport("girth", params, {},
                             [{"kind": "error", "q": q, "error": err}],
                             [{"section": "girth", "q": q, "error": err,
                               "passed": False}], "fail")
        modulus_by_q = {str(q): list(fld.modulus)}
        if args.k is not None and not 1 <= args.k <= q - 1:
            err = "ValueError: k must be in 1..%d, got %d" % (q - 1, args.k)
            return RunReport("girth", params, modulus_by_q,
                             [{"kind": "error", "q": q, "error": err}],
                             [{"section": "girth", "q": q, "error": err,
                               "passed": False}], "fail")
        graph = graphs.MonomialGraph(fld, f_exps, g_exps)
        try:
            value = graphs.girth(graph, cap=args.girth_cap)
        except GfppError as exc:
            err = "%s: %s" % (type(exc).__name__, exc)
            return RunReport("girth", params, modulus_by_q,
                             [{"kind": "error", "q": q, "error": err}],
                             [{"section": "girth", "q": q, "error": err,
                               "passed": False}], "fail")
        ge8 = value >= 8
        row = {"kind": "girth", "q": q, "k": args.k,
               "f_exps": list(f_exps), "g_exps": list(g_exps),
               "girth": None if value == math.inf else int(value),
               "girth_ge_8": ge8}
        if args.k is not None:
            rec = permpoly.sweep_record(fld, args.k)
            row.update({"a_pp": rec.a_pp, "b_pp": rec.b_pp,
                        "p_power": rec.k_is_p_power})
            implication_ok = (not ge8) or (rec.a_pp and rec.b_pp)
            verdict = {"section": "girth", "q": q, "k": args.k,
                       "girth": row["girth"], "implication_ok": implication_ok,
                       "passed": implication_ok}
        else:
            verdict = {"section": "girth", "q": q, "girth": row["girth"],
                       "passed": True}
        return RunReport("girth", params, modulus_by_q, [row], [verdict],
                         _overall([verdict], False))

    modulus_by_q = _moduli_for([q], args.field_cap)
    return _with_cache(args, "girth", params, modulus_by_q, compute)


def cmd_verify_all(args) -> RunReport:
    qs = []
    for q in odd_prime_powers(args.q_max):
        try:
            p, e = factor_prime_power(q)
            Field(p, e, cap=args.field_cap)
        except GfppError:
            continue
        qs.append(q)
    params = {"q_max": args.q_max, "field_cap": args.field_cap,
              "girth_cap": args.girth_cap,
              "upper_half_primes": list(UPPER_HALF_PRIMES)}
    modulus_by_q = _moduli_for(qs, args.field_cap)

    def compute() -> RunReport:
        specs = [(q, args.field_cap, args.girth_cap) for q in qs]
        rows: list = []
        verdicts: list = []
        for res in _run_tasks(_verify_task, specs, args.jobs):
            rows.extend(res["rows"])
            verdicts.extend(res["verdicts"])
        for p in UPPER_HALF_PRIMES:
            uh_rows, uh_verdict = _upper_half_grid(p)
            rows.extend(uh_rows)
            verdicts.append(uh_verdict)
        return RunReport("verify-all", params, modulus_by_q, rows, verdicts,
                         _overall(verdicts, False))

    return _with_cache(args, "verify-all", params, modulus_by_q, compute)


def cmd_field_info(args) -> RunReport:
    qs = sorted(set(args.q))
    params = {"q": qs, "field_cap": args.field_cap}
    rows: list = []
    verdicts: list = []
    modulus_by_q = {}
    had_error = False
    for q in qs:
        try:
            p, e = factor_prime_power(q)
            fld = Field(p, e, cap=args.field_cap)
        except (GfppError, ValueError) as exc:
            had_error = True
            err = "%s: %s" % (type(exc).__name__, exc)
            rows.append({"kind": "error", "q": q, "error": err})
            verdicts.append({"section": "field", "q": q, "error": err,
                             "passed": False})
            continue
        modulus_by_q[str(q)] = list(fld.modulus)
        rows.append({"kind": "field", "q": q, "p": fld.p, "e": fld.e,
                     "modulus": list(fld.modulus),
                     "modulus_str": poly_str(fld.modulus)})
        verdicts.append({"section": "field", "q": q, "passed": True})
    return RunReport("field-info", params, modulus_by_q, rows, verdicts,
                     _overall(verdicts, had_error))


# -- argument parsing --------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers: %r" % text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfpp",
        description="Exhaustive finite-field checks: permutation-polynomial "
                    "sweeps, binomial-sum identities, and monomial-graph girth.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--json", metavar="PATH",
                        help="write the JSON report to PATH instead of stdout")
        sp.add_argument("--csv", metavar="PATH",
                        help="write sweep rows to PATH as CSV")
        sp.add_argument("--jobs", type=int, default=None, metavar="N",
                        help="worker processes (default: all cores)")
        sp.add_argument("--cache", metavar="DIR", help="result cache directory")
        sp.add_argument("--field-cap", type=int, default=None, metavar="N",
                        help="max field size (env GFPP_FIELD_CAP, default %d)"
                             % DEFAULT_FIELD_CAP)
        sp.add_argument("--girth-cap", type=int, default=None, metavar="N",
                        help="max q for girth BFS (env GFPP_GIRTH_CAP, default %d)"
                             % graphs.DEFAULT_GIRTH_CAP)

    sp = sub.add_parser("sweep", help="per-(q, k) PP sweep with per-q verdicts")
    sp.add_argument("--q", type=_int_list, required=True, metavar="Q,Q,...")
    sp.add_argument("--which", choices=("A", "B", "two"), default="two",
                    help="which family's witness set to judge (default: two)")
    sp.add_argument("--with-criterion", action="store_true",
                    help="also evaluate the binomial-sum criterion per k")
    sp.add_argument("--with-girth", action="store_true",
                    help="also test girth >= 8 of G_q(XY, X^kY^2k) per k")
    add_common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("identities",
                        help="support-identity grid per q (e >= 3) and the "
                             "upper-half sum grid per p")
    sp.add_argument("--q", type=_int_list, default=None, metavar="Q,Q,...")
    sp.add_argument("--p", type=_int_list, default=None, metavar="P,P,...")
    add_common(sp)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("girth", help="exact girth of one monomial graph")
    sp.add_argument("--q", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, default=None,
                       help="use the family G_q(XY, X^kY^2k)")
    group.add_argument("--exps", type=_int_list, default=None, metavar="A,B,C,D",
                       help="explicit exponents for f = X^AY^B, g = X^CY^D")
    add_common(sp)
    sp.set_defaults(func=cmd_girth)

    sp = sub.add_parser("verify-all",
                        help="run every suite for all odd prime powers up to --q-max")
    sp.add_argument("--q-max", type=int, required=True, dest="q_max")
    add_common(sp)
    sp.set_defaults(func=cmd_verify_all)

    sp = sub.add_parser("field-info", help="modulus and parameters per field")
    sp.add_argument("--q", type=_int_list, required=True, metavar="Q,Q,...")
    add_common(sp)
    sp.set_defaults(func=cmd_field_info)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.field_cap is None:
        args.field_cap = int(os.environ.get("GFPP_FIELD_CAP", DEFAULT_FIELD_CAP))
    if args.girth_cap is None:
        args.girth_cap = int(os.environ.get("GFPP_GIRTH_CAP", graphs.DEFAULT_GIRTH_CAP))
    if args.jobs is None:
        args.jobs = os.cpu_count() or 1
    if args.command == "girth" and args.exps is not None and len(args.exps) != 4:
        parser.error("--exps needs exactly four integers A,B,C,D")
    started = time.perf_counter()
    report = args.func(args)
    report.timing.setdefault("seconds", round(time.perf_counter() - started, 3))
    _emit(report, args)
    return 0 if report.overall == "pass" else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
