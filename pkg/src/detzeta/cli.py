"""Command-line front end: ``detzeta <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .lring import format_factored, lclass_euler, lclass_eval, lclass_to_json
from .oracle import BudgetExceededError, census_to_csv, census_to_json, count_orbits, verify_class
from .orbits import NotInDomainError, PointClass, class_orbit, format_lambda, parse_lambda
from .strata import InstabilityError, LevelTooSmallError, all_strata, determinantal_resolution, stratum_class
from .zeta import (
    check_holomorphy,
    check_monodromy_conjecture,
    eigenvalue_set,
    monodromy_zeta_at_point,
    motivic_zeta_rational,
    motivic_zeta_series,
    topological_zeta,
    topological_zeta_from_strata,
    twisted_topological_zeta,
    twisted_topological_zeta_from_strata,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Report:
    """What a subcommand hands to :func:`emit_report`: text lines, a JSON document, optional CSV."""

    lines: list
    doc: dict
    csv: Optional[str] = None
    ok: bool = True


def emit_report(result: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(result.doc, separators=(",", ":")) + "\n"
    if fmt == "csv":
        if result.csv is None:
            raise UsageError("--format csv is only available for oracle census output")
        return result.csv
    return "".join(line + "\n" for line in result.lines)


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _shape(args, *, need_r: bool = True) -> tuple:
    missing = [f"--{k}" for k in ("m", "n", "r") if getattr(args, k) is None and (k != "r" or need_r)]
    if missing:
        raise UsageError(f"missing required option {missing[0]}")
    return (args.m, args.n, args.r) if need_r else (args.m, args.n)


def _require(args, name: str):
    val = getattr(args, name.replace("-", "_"))
    if val is None:
        raise UsageError(f"missing required option --{name}")
    return val


# -- subcommands ------------------------------------------------------------------------


def cmd_zeta(args) -> Report:
    m, n, r = _shape(args)
    z = topological_zeta(m, n, r)
    agree = topological_zeta_from_strata(m, n, r) == z
    res = determinantal_resolution(m, n, r)
    lines = [f"Z_top(s) = {z}"]
    if not agree:
        lines.append("strata pipeline disagrees with the closed form: FAIL")
    doc = {
        "shape": {"m": m, "n": n, "r": r},
        "zeta": z.to_product_string(),
        "text": z.to_text(),
        "poles": [{"N": N, "nu": nu, "s0": _frac(Fraction(-nu, N))} for N, nu in res.pairs],
        "strata_agree": agree,
    }
    return Report(lines, doc, ok=agree)


def cmd_twisted(args) -> Report:
    m, n, r = _shape(args)
    d = _require(args, "d")
    z = twisted_topological_zeta(m, n, r, d)
    agree = twisted_topological_zeta_from_strata(m, n, r, d) == z
    lines = [f"Z_top^({d})(s) = {z}"]
    if not agree:
        lines.append("strata pipeline disagrees with the closed form: FAIL")
    doc = {"shape": {"m": m, "n": n, "r": r}, "d": d, "zeta": z.to_product_string(), "text": z.to_text(),
           "polynomial": z.is_polynomial(), "strata_agree": agree}
    return Report(lines, doc, ok=agree)


def _J_text(J) -> str:
    return "{" + ",".join(str(j) for j in sorted(J)) + "}"


def cmd_motivic(args) -> Report:
    m, n, r = _shape(args)
    mz = motivic_zeta_rational(m, n, r)
    lines = ["pairs (N, nu): " + " ".join(f"({N},{nu})" for N, nu in mz.pairs.pairs)]
    strata = []
    for J, cls in mz.strata_form:
        chi = lclass_euler(cls)
        lines.append(f"E_{_J_text(J)} = {format_factored(cls)}  chi = {chi}")
        strata.append({"J": sorted(J), "class": lclass_to_json(cls), "text": format_factored(cls), "euler": int(chi)})
    spec_ = mz.euler_specialization()
    ok = spec_ == topological_zeta(m, n, r)
    lines.append(f"Euler specialization: {spec_}")
    doc = {"shape": {"m": m, "n": n, "r": r}, "pairs": [list(p) for p in mz.pairs.pairs], "strata": strata,
           "euler_specialization": spec_.to_product_string()}
    if args.order is not None:
        if args.order < 0:
            raise UsageError(f"--order must be nonnegative, got {args.order}")
        direct = motivic_zeta_series(m, n, r, args.order)
        expanded = mz.expand(args.order)
        match = direct == expanded
        ok = ok and match
        for k, c in enumerate(direct):
            lines.append(f"T^{k}: {c}")
        lines.append(f"series agrees with strata form: {'PASS' if match else 'FAIL'}")
        doc["series"] = [lclass_to_json(c) for c in direct]
        doc["series_agree"] = match
    return Report(lines, doc, ok=ok)


def cmd_monodromy(args) -> Report:
    m, n, r = _shape(args)
    sign = args.sign
    if args.rank is None:
        if args.q is not None or args.no_alpha:
            raise UsageError("--q/--no-alpha need --rank")
        eig = eigenvalue_set(m, n, r, sign=sign)
        text = ", ".join(_frac(x) for x in eig)
        return Report([f"eigenvalues = {{{text}}}"], {"eigenvalues": [_frac(x) for x in eig]})
    if args.q is not None and args.no_alpha:
        raise UsageError("--q and --no-alpha are mutually exclusive")
    if args.q is None and not args.no_alpha:
        raise UsageError("--rank needs either --q or --no-alpha")
    p = PointClass(m, n, r, args.rank + 1, None if args.no_alpha else args.q)
    z = monodromy_zeta_at_point(p, sign=sign)
    doc = {"shape": {"m": m, "n": n, "r": r}, "point": {"i": p.i, "q": p.q}, "zeta": z.to_text(),
           "factors": [[a, e] for a, e in z.factors], "roots": [_frac(x) for x in sorted(z.roots())]}
    return Report([f"Z_mon = {z}"], doc)


def cmd_orbit_class(args) -> Report:
    m, n = _shape(args, need_r=False)
    if args.lambda_ is None:
        raise UsageError("missing required option --lambda")
    lam = parse_lambda(args.lambda_, args.level)
    cls = class_orbit(m, n, lam)
    doc = {"shape": {"m": m, "n": n}, "level": lam.level, "lambda": format_lambda(lam.entries),
           "class": lclass_to_json(cls), "factored": format_factored(cls), "expanded": str(cls)}
    if args.q is not None:
        doc["value"] = str(lclass_eval(cls, args.q))
    return Report([format_factored(cls)], doc)


def cmd_strata(args) -> Report:
    m, n, r = _shape(args)
    if args.level is None:
        strata = all_strata(m, n, r)
    else:
        strata = [stratum_class(m, n, r, J, level=args.level if J else None)
                  for k in range(r + 1) for J in combinations(range(1, r + 1), k)]
    lines, docs = [], []
    for s in strata:
        chi = lclass_euler(s.value)
        lines.append(f"J={_J_text(s.J)}: {format_factored(s.value)}  chi={chi}  level={s.witnessed_level}")
        docs.append({"J": sorted(s.J), "class": lclass_to_json(s.value), "euler": int(chi), "level": s.witnessed_level})
    return Report(lines, {"shape": {"m": m, "n": n, "r": r}, "strata": docs})


def cmd_oracle(args) -> Report:
    m, n = _shape(args, need_r=False)
    q = _require(args, "q")
    l = args.level if args.level is not None else 0
    if args.lambda_ is not None:
        lam = parse_lambda(args.lambda_, l)
        v = verify_class(lam, m, n, q)
        line = f"lambda={format_lambda(lam.entries)} level={lam.level} q={q}: symbolic {v.symbolic}, counted {v.counted} {'PASS' if v else 'FAIL'}"
        doc = {"shape": {"m": m, "n": n}, "level": lam.level, "q": q, "lambda": format_lambda(lam.entries),
               "symbolic": str(v.symbolic), "counted": v.counted, "verdict": "PASS" if v else "FAIL"}
        return Report([line], doc, ok=v.passed)
    census = count_orbits(m, n, l, q, jobs=args.jobs)
    lines = [f"{format_lambda(k)}: {c}" for k, c in census.items()]
    lines.append(f"total: {census.total()}")
    return Report(lines, census_to_json(census), csv=census_to_csv(census))


def _grid(args):
    if args.m is not None or args.n is not None or args.r is not None:
        yield _shape(args)
        return
    top = args.max if args.max is not None else 5
    if top < 1:
        raise UsageError(f"--max must be >= 1, got {top}")
    for m in range(1, top + 1):
        for n in range(m, top + 1):
            for r in range(1, m + 1):
                yield (m, n, r)


def cmd_check(args) -> Report:
    which = args.conjecture
    lines, rows, ok = [], [], True
    d_max = args.d if args.d is not None else 6
    for m, n, r in _grid(args):
        if which == "monodromy":
            rep = check_monodromy_conjecture(m, n, r, sign=args.sign)
            detail = " ".join(f"{w['s0']}->{w['eigenvalue']}" for w in rep.witnesses)
        else:
            rep = check_holomorphy(m, n, r, d_max, sign=args.sign)
            detail = f"d<={d_max}"
        ok = ok and rep.verdict
        lines.append(f"({m},{n},{r}) {rep.verdict_text}  {detail}")
        rows.append(rep.to_json())
    lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
    return Report(lines, {"check": which, "results": rows, "verdict": "PASS" if ok else "FAIL"}, ok=ok)


COMMANDS = {
    "zeta": cmd_zeta,
    "twisted": cmd_twisted,
    "motivic": cmd_motivic,
    "monodromy": cmd_monodromy,
    "orbit-class": cmd_orbit_class,
    "strata": cmd_strata,
    "oracle": cmd_oracle,
    "check": cmd_check,
}


def _options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    for name in ("m", "n", "r", "level", "order", "d", "q", "rank", "max"):
        common.add_argument(f"--{name}", type=int)
    common.add_argument("--lambda", dest="lambda_", metavar="CSV")
    common.add_argument("--no-alpha", action="store_true")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--sign", type=int, choices=(1, -1), default=1, help="A'Campo exponent convention")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _options()
    parser = _Parser(prog="detzeta", description="Zeta functions of determinantal varieties, exactly.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "check":
            p.add_argument("conjecture", choices=("monodromy", "holomorphy"))
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("missing subcommand; choose from " + ", ".join(COMMANDS))
        if args.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
        report = COMMANDS[args.command](args)
        text = emit_report(report, args.format)
    except UsageError as e:
        print(f"detzeta: usage error: {e}", file=err)
        return EXIT_USAGE
    except (BudgetExceededError, LevelTooSmallError) as e:
        print(f"detzeta: {e}", file=err)
        return EXIT_LIMIT
    except InstabilityError as e:
        print(f"detzeta: FAIL: {e}", file=err)
        return EXIT_FAIL
    except (ValueError, NotInDomainError) as e:
        print(f"detzeta: usage error: {e}", file=err)
        return EXIT_USAGE
    out.write(text)
    return EXIT_OK if report.ok else EXIT_FAIL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
