"""Command-line interface.

Exit codes: 0 success, 2 invalid invocation or input, 3 a mathematical check
failed (a JSON report is written to stderr).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import basis, oracle, rewrite, series
from .errors import FuelExhausted, MackExtError, ValidationError
from .group import GroupCtx, lines_by_position, lines_not_in_kernel
from .words import element_to_json, format_element, parse_element, word_str

SCHEMA = 1
EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 2, 3


class CheckFailed(Exception):
    def __init__(self, report: dict):
        super().__init__(report.get("check", "check failed"))
        self.report = report


@dataclass
class CommandConfig:
    command: str
    p: int
    r: int
    fmt: str = "text"
    degree: Optional[int] = None
    upto: Optional[int] = None
    seed: int = 0
    fuel: int = rewrite.DEFAULT_FUEL
    guard_override: bool = False

    @property
    def ctx(self) -> GroupCtx:
        return GroupCtx(self.p, self.r)


def _emit(obj, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=False) + "\n")


def _table(rows, header, fmt, out, payload):
    if fmt == "json":
        _emit(payload, fmt, out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for row in rows:
            out.write(" ".join(map(str, row)) + "\n")


def cmd_lines(args, cfg, out):
    ctx = cfg.ctx
    if args.phi is not None:
        phi = ctx.homomorphism([int(x) for x in args.phi.split(",")])
        lines = lines_not_in_kernel(ctx, phi)
    elif args.position is not None:
        lines = lines_by_position(ctx, args.position)
    else:
        lines = list(ctx.lines)
    rows = [(str(x), x.position) for x in lines]
    _table(
        rows,
        ["line", "position"],
        cfg.fmt,
        out,
        {"p": ctx.p, "r": ctx.r, "lines": [{"rep": list(x.rep), "position": x.position} for x in lines]},
    )


def cmd_basis(args, cfg, out):
    ctx = cfg.ctx
    n = _need(cfg.degree, "--degree")
    if args.count_only:
        _scalar(basis.count_basis(ctx, n), "count", cfg, out, n)
        return
    words = basis.admissible_basis(ctx, n)
    if cfg.fmt == "json":
        _emit(
            {"p": ctx.p, "r": ctx.r, "degree": n, "words": [[str(a) for a in w] for w in words]},
            "json",
            out,
        )
    else:
        for w in words:
            out.write(word_str(w) + "\n")


def _scalar(value, key, cfg, out, n):
    if cfg.fmt == "json":
        _emit({"p": cfg.p, "r": cfg.r, "degree": n, key: value}, "json", out)
    else:
        out.write(f"{value}\n")


def cmd_count(args, cfg, out):
    n = _need(cfg.degree, "--degree")
    _scalar(basis.count_basis(cfg.ctx, n), "count", cfg, out, n)


def cmd_series(args, cfg, out):
    ctx = cfg.ctx
    n = _need(cfg.upto, "--upto")
    coeffs = list(series.poincare_coeffs(ctx, n))
    payload = {"p": ctx.p, "r": ctx.r, "coefficients": coeffs}
    report = None
    if args.check_recurrence:
        report = series.recurrence_check(ctx, n)
        payload["recurrence"] = report.to_json()
    fmt = "csv" if cfg.fmt == "text" else cfg.fmt
    _table(list(enumerate(coeffs)), ["n", "c_n"], fmt, out, payload)
    if report is not None and not report.ok:
        raise CheckFailed(report.to_json())


def cmd_reduce(args, cfg, out):
    ctx = cfg.ctx
    e = parse_element(ctx, args.element)
    trace = None
    if args.trace:
        def trace(tag, site, word, n_terms):
            sys.stderr.write(f"{tag} site={site} word={word_str(word)} terms={n_terms}\n")
    nf = rewrite.normal_form(e, fuel=cfg.fuel, trace=trace)
    _element_out(nf, cfg, out)


def _element_out(e, cfg, out):
    if cfg.fmt == "json":
        _emit({**element_to_json(e), "text": format_element(e)}, "json", out)
    else:
        out.write(format_element(e) + "\n")


def cmd_mul(args, cfg, out):
    ctx = cfg.ctx
    a = parse_element(ctx, args.left)
    b = parse_element(ctx, args.right)
    _element_out(rewrite.multiply(a, b, fuel=cfg.fuel), cfg, out)


def cmd_check(args, cfg, out):
    ctx = cfg.ctx
    rel = rewrite.check_relations(ctx, fuel=cfg.fuel)
    conf = rewrite.check_confluence(
        ctx, sample_count=args.samples, max_degree=args.max_degree, seed=cfg.seed, fuel=cfg.fuel
    )
    reports = [rel.to_json(), conf.to_json()]
    _report_out(reports, cfg, out)


def _report_out(reports, cfg, out):
    ok = all(r["ok"] for r in reports)
    if cfg.fmt == "json":
        _emit({"p": cfg.p, "r": cfg.r, "ok": ok, "reports": reports}, "json", out)
    else:
        for r in reports:
            status = "PASS" if r["ok"] else "FAIL"
            extra = f" checked={r['checked']}" if "checked" in r else ""
            out.write(f"{status} {r['check']}{extra}\n")
    if not ok:
        raise CheckFailed({"check": "summary", "ok": False, "reports": reports})


def _oracle_algebra(cfg):
    return oracle.YoshidaAlgebra(cfg.ctx, override=cfg.guard_override)


def cmd_oracle(args, cfg, out):
    n = _need(cfg.upto, "--upto")
    alg = _oracle_algebra(cfg)
    dims = oracle.ext_dims(cfg.ctx, n, algebra=alg)
    payload = {"p": cfg.p, "r": cfg.r, "ext_dims": dims}
    if args.audit:
        payload["audit"] = {
            "objects": [str(h) for h in alg.objects],
            "hom_dims": [[alg.dim(i, j) for j in range(len(alg))] for i in range(len(alg))],
            "algebra_dim": alg.total_dim,
            "radical_dim": alg.radical_dim,
            "radical_powers": alg.radical_powers(),
        }
    fmt = "csv" if cfg.fmt == "text" else cfg.fmt
    _table(list(enumerate(dims)), ["n", "dim"], fmt, out, payload)
    if args.audit and fmt != "json":
        sys.stderr.write(json.dumps(payload["audit"]) + "\n")


def cmd_verify_all(args, cfg, out):
    ctx = cfg.ctx
    n = _need(cfg.upto, "--upto")
    reports = []
    counts = [basis.count_basis(ctx, k) for k in range(n + 1)]
    coeffs = list(series.poincare_coeffs(ctx, n))
    reports.append(
        {"check": "basis_vs_series", "ok": counts == coeffs, "counts": counts, "series": coeffs}
    )
    dims = oracle.ext_dims(ctx, n, override=cfg.guard_override)
    reports.append({"check": "oracle_vs_basis", "ok": dims == counts, "ext_dims": dims})
    if ctx.r >= 2:
        reports.append(series.recurrence_check(ctx, n).to_json())
    reports.append(rewrite.check_relations(ctx, fuel=cfg.fuel).to_json())
    reports.append(
        rewrite.check_confluence(
            ctx, sample_count=args.samples, max_degree=max(n, 2), seed=cfg.seed, fuel=cfg.fuel
        ).to_json()
    )
    _report_out(reports, cfg, out)


def _need(value, flag):
    if value is None:
        raise ValidationError(f"{flag} is required")
    if value < 0:
        raise ValidationError(f"{flag} must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--rank", type=int, required=True, help="rank r of (C_p)^r")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--fuel", type=int, default=rewrite.DEFAULT_FUEL)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="mackext",
        description="Ext algebra of the trivial simple cohomological Mackey functor for (C_p)^r.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lines", parents=[common], help="list lines of G")
    s.add_argument("--position", type=int)
    s.add_argument("--phi", help="comma-separated covector; list lines outside its kernel")
    s.set_defaults(func=cmd_lines)

    s = sub.add_parser("basis", parents=[common], help="admissible words of a degree")
    s.add_argument("--degree", type=int)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("count", parents=[common], help="number of admissible words")
    s.add_argument("--degree", type=int)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("series", parents=[common], help="Poincare series coefficients")
    s.add_argument("--upto", type=int)
    s.add_argument("--check-recurrence", action="store_true")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("reduce", parents=[common], help="normal form of an element")
    s.add_argument("element")
    s.add_argument("--trace", action="store_true", help="log rewrite steps to stderr")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("mul", parents=[common], help="product of two elements")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("check", parents=[common], help="relation and confluence checks")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--max-degree", type=int, default=6)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("oracle", parents=[common], help="Ext dimensions by linear algebra")
    s.add_argument("--upto", type=int)
    s.add_argument("--guard-override", action="store_true")
    s.add_argument("--audit", action="store_true")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify-all", parents=[common], help="basis, series and oracle agreement")
    s.add_argument("--upto", type=int)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--guard-override", action="store_true")
    s.set_defaults(func=cmd_verify_all)
    return parser


def dispatch(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = CommandConfig(
        command=args.command,
        p=args.p,
        r=args.rank,
        fmt=args.format,
        degree=getattr(args, "degree", None),
        upto=getattr(args, "upto", None),
        seed=args.seed,
        fuel=args.fuel,
        guard_override=getattr(args, "guard_override", False),
    )
    try:
        if cfg.fuel <= 0:
            raise ValidationError("--fuel must be positive")
        cfg.ctx  # validates p and r
        args.func(args, cfg, out)
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CheckFailed as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, **exc.report}) + "\n")
        return EXIT_MATH
    except (FuelExhausted, MackExtError) as exc:
        sys.stderr.write(
            json.dumps({"schema": SCHEMA, "check": args.command, "ok": False, "error": str(exc)})
            + "\n"
        )
        return EXIT_MATH
    return EXIT_OK


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
