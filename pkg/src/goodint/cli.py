"""Command-line front end: ``goodint <command> ...``.

Every command accepts ``--json``; JSON output is an envelope
``{schema_version, command, params, result}`` with sorted keys.
Exit codes: 0 success, 2 domain error, 3 size guard, 1 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence

from . import codes as C
from .cyclotomic import coset_goodness_bridge, coset_type, cosets
from .errors import ConsistencyError, DomainError, SizeError
from .factorizer import factor_table
from .galois import format_poly
from .goodness import CLASSES, classify, good_table
from .numtheory import prime_power_parts

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_INTERNAL, EXIT_DOMAIN, EXIT_SIZE = 0, 1, 2, 3


def _envelope(command: str, params: dict, result) -> str:
    env = {"schema_version": SCHEMA_VERSION, "command": command, "params": params, "result": result}
    return json.dumps(env, sort_keys=True, indent=2)


def _aligned(header: Sequence[str], rows: list[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def _fmt_set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


# ---------------------------------------------------------------------------
# commands: each returns (json result, human text)


def cmd_classify(args) -> tuple[dict, str]:
    v = classify(args.a, args.b, args.ell)
    result = {
        "good": v.good, "oddly": v.oddly, "evenly": v.evenly, "label": v.label,
        "witness_k": v.witness_k, "trace": list(v.trace),
        "beta": v.beta, "d": v.d, "s_values": list(v.s_values),
    }
    if not v.good:
        text = "bad"
    elif v.oddly and v.evenly:
        # both parities occur, so a single k would be misleading
        text = "good (oddly & evenly)"
    else:
        text = f"good ({v.label}), witness k={v.witness_k}"
    if args.trace:
        text += "\n" + "\n".join(f"  - {t}" for t in v.trace)
    return result, text


def cmd_table(args) -> tuple[dict, str]:
    vals = good_table(args.a, args.b, args.max, args.cls)
    return {"values": vals}, ", ".join(map(str, vals))


def cmd_cosets(args) -> tuple[dict, str]:
    part = cosets(args.N, args.q)
    herm = args.hermitian_base is not None
    if herm:
        prime_power_parts(args.hermitian_base)
        if args.hermitian_base**2 != args.q:
            raise DomainError(f"--hermitian-base {args.hermitian_base} squared is not q = {args.q}")
    base = args.hermitian_base if herm else args.q
    recs, rows = [], []
    for c in part:
        ty = coset_type(c, part, herm)
        bridge = coset_goodness_bridge(c, base, herm)
        recs.append({
            "rep": c.rep, "elements": list(c.elements), "add_order": c.add_order, "size": c.size,
            "type": ty.kind, "partner": ty.partner, "bridge": bridge,
        })
        rows.append((c.rep, c.add_order, c.size, _fmt_set(c.elements), ty.kind,
                     "-" if ty.partner is None else ty.partner, "yes" if bridge else "no"))
    cls = "oddly-good" if herm else "good"
    header = ("rep", "ord", "size", "coset", "type", "partner", cls)
    return {"cosets": recs}, _aligned(header, rows)


def cmd_factor(args) -> tuple[dict, str]:
    duality = "hermitian" if args.hermitian else "euclidean"
    table = factor_table(args.n, args.p, args.m, duality)
    rows = [
        (r.coset_rep, r.add_order, r.kind, "-" if r.partner is None else r.partner, r.multiplicity, format_poly(r.poly))
        for r in table
    ]
    title = f"x^{table.n} - 1 over {table.field.name} ({duality}), n = {table.N} * {table.p}^{table.t}"
    text = title + "\n" + _aligned(("rep", "ord", "kind", "partner", "mult", "poly"), rows)
    return table.to_dict(), text


def _verify_one(code_dict_and_params):
    n, p, m, duality, exps = code_dict_and_params
    table = factor_table(n, p, m, duality)
    code = C.CyclicCode(table, tuple(exps))
    rep = C.brute_verify(code)
    rep["exponents"] = list(exps)
    rep["lcd_structural"] = C.is_lcd(code)
    rep["self_dual_structural"] = C.is_self_dual(code)
    return rep


def cmd_codes(args) -> tuple[dict, str]:
    limit = args.limit if args.limit is not None else C.default_limit()
    if args.action == "count":
        cnt = C.count_codes(args.n, args.p, args.m, args.duality, args.kind)
        return {"count": cnt}, str(cnt)
    stream = C.enumerate_codes(args.n, args.p, args.m, args.duality, args.kind, limit)
    if args.action == "list":
        items = [c.to_dict() for c in stream]
        text = "\n".join(f"{it['exponents']}  dim={it['dim']}  g = {it['generator']}" for it in items)
        return {"codes": items}, text
    if args.n > C.MAX_BRUTE_N:
        raise SizeError(f"verification is limited to n <= {C.MAX_BRUTE_N}")
    jobs = [(args.n, args.p, args.m, args.duality, c.exponents) for c in stream]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            reports = list(ex.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]
    want = "lcd" if args.kind == "lcd" else "self_dual"
    ok = all(r[want] and r[want + "_structural"] for r in reports)
    text = "\n".join(
        f"{r['exponents']}  dim={r['dim']} dual={r['dim_dual']} meet={r['dim_intersection']} "
        f"self_dual={r['self_dual']} lcd={r['lcd']}"
        for r in reports
    )
    text += f"\n{len(reports)} codes verified, all {want}: {ok}"
    return {"reports": reports, "all_pass": ok, "verified": len(reports)}, text


# ---------------------------------------------------------------------------
# parser


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goodint", description="Good integers, cyclotomic factorizations and cyclic codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit a JSON envelope")
        sp.set_defaults(func=fn)
        return sp

    sp = add("classify", cmd_classify, "classify ell w.r.t. (a, b)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--trace", action="store_true", help="print the decision trace")

    sp = add("table", cmd_table, "list good / oddly-good / evenly-good integers up to --max")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--max", type=_positive, required=True)
    sp.add_argument("--class", dest="cls", choices=CLASSES, default="good")

    sp = add("cosets", cmd_cosets, "q-cyclotomic cosets of Z_N with duality types")
    sp.add_argument("--N", type=_positive, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--hermitian-base", type=int, default=None, metavar="R",
                    help="report Hermitian types for q = R^2")

    sp = add("factor", cmd_factor, "factor x^n - 1 into (conjugate-)reciprocal groups")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=_positive, default=1)
    sp.add_argument("--hermitian", action="store_true", help="work over F_{p^{2m}} with Hermitian pairing")

    sp = add("codes", cmd_codes, "count, list or verify LCD / self-dual cyclic codes")
    sp.add_argument("action", choices=("count", "list", "verify"))
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=_positive, default=1)
    sp.add_argument("--duality", choices=("euclidean", "hermitian"), default="euclidean")
    sp.add_argument("--kind", choices=C.CODE_KINDS, default="lcd")
    sp.add_argument("--limit", type=int, default=None, help="cap on listed codes (default $GOODINT_LIMIT or 10^6)")
    sp.add_argument("--jobs", type=_positive, default=1, help="worker processes for verify")
    return ap


def _params(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, text = args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        print(_envelope(args.command, _params(args), result))
    elif text:
        print(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
