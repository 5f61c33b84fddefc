"""Command-line front end with machine-readable JSON output.

One subcommand per library capability.  Exit codes: 0 success, 2 domain
error (bad input, violated precondition), 3 budget exhausted.  Human
output is a plain key/value listing; --json emits one JSON document.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bounds, factor, qoracle, transforms
from .eta import EtaParseError, EtaQuotient
from .orders import order_vector
from .factor import EnumerationBudgetError
from .qoracle import SeriesBudgetError

__all__ = ["CommandResult", "main", "run"]

DEFAULT_TERMS = 240


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    json: dict


def _budget() -> int:
    raw = os.environ.get("ETAQ_BUDGET")
    if raw is None:
        return factor.DEFAULT_ENUM_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ETAQ_BUDGET must be an integer, got {raw!r}") from None


def _witness_dict(w: factor.FactorizationWitness | None):
    if w is None:
        return None
    return {"g": w.g.format(), "h": w.h.format(), "on_level": w.on_level}


def _parse(text: str) -> EtaQuotient:
    return EtaQuotient.parse(text)


def _cmd_info(args) -> dict:
    f = _parse(args.eta)
    ov = order_vector(f)
    return {
        "level": f.level,
        "weight2": f.weight2,
        "holomorphic": all(a >= 0 for a in ov.orders24.values()),
        "orders24": {str(t): a for t, a in ov.orders24.items()},
    }


def _cmd_orders(args) -> dict:
    f = _parse(args.eta)
    M = args.on if args.on is not None else f.level
    return order_vector(f, M).to_json_dict()


def _cmd_factorize(args) -> dict:
    f = _parse(args.eta)
    M = args.on if args.on is not None else f.level
    w = factor.factorize_on(f, M, budget=_budget())
    return {"factorizable": w is not None, "witness": _witness_dict(w)}


def _cmd_factors(args) -> dict:
    f = _parse(args.eta)
    M = args.on if args.on is not None else f.level
    facs = factor.all_factors_on(f, M, budget=_budget())
    return {"count": len(facs), "factors": [g.format() for g in facs]}


def _cmd_quasi(args) -> dict:
    f = _parse(args.eta)
    return {"quasi_irreducible": factor.quasi_irreducible(f, budget=_budget())}


def _cmd_irreducible(args) -> dict:
    f = _parse(args.eta)
    cap = args.cap if args.cap is not None else 4 * f.level
    v = factor.decide_irreducible(f, cap, budget=_budget())
    out: dict = {"verdict": "unknown" if v.kind == factor.UNKNOWN else v.kind}
    if v.method is not None:
        out["method"] = v.method
    if v.witness is not None:
        out["witness"] = _witness_dict(v.witness)
    if v.cap is not None:
        out["cap"] = v.cap
    return out


def _cmd_minlevel(args) -> dict:
    f = _parse(args.eta)
    cap = args.cap if args.cap is not None else 4 * f.level
    return {
        "min_level": factor.min_factorization_level(f, cap, budget=_budget()),
        "cap": cap,
    }


def _cmd_lower(args) -> dict:
    f = _parse(args.eta)
    M = args.from_level if args.from_level is not None else f.level
    low = transforms.lower(f, M, args.to)
    out = {
        "level": low.level,
        "integral": low.integral,
        "exponents": {str(d): str(e) for d, e in sorted(low.exponents.items())},
    }
    if low.integral:
        out["eta"] = low.to_eta().format()
    return out


def _cmd_atkin(args) -> dict:
    f = _parse(args.eta)
    N = args.level if args.level is not None else f.level
    return {"eta": transforms.atkin_lehner(f, args.n, N).format()}


def _cmd_rescale(args) -> dict:
    return {"eta": _parse(args.eta).rescale(args.by).format()}


def _cmd_compose(args) -> dict:
    return {"eta": transforms.compose(_parse(args.eta), _parse(args.eta2)).format()}


def _cmd_extract(args) -> dict:
    f0, v = _parse(args.eta).extract()
    return {"primitive": f0.format(), "rescaling": v}


def _cmd_bound(args) -> dict:
    if args.corollary:
        report = bounds.min_level_bound(args.N, weight_free=True)
    else:
        if args.k is None:
            raise ValueError("either --k or --corollary is required")
        report = bounds.min_level_bound(args.N, args.k)
    return report.to_json_dict()


def _cmd_qexp(args) -> dict:
    qs = qoracle.qexp(_parse(args.eta), args.terms)
    return {"offset24": qs.offset24, "coeffs": list(qs.coeffs)}


def _cmd_verify(args) -> dict:
    lhs = _parse(args.eta)
    rhs = [_parse(t) for t in args.factors]
    ok = qoracle.verify_identity(lhs, rhs, args.terms)
    return {"verified": ok}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="etaq",
        description="exact arithmetic for holomorphic eta quotients",
    )
    top.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("info", _cmd_info, "level, weight and cusp orders")
    p.add_argument("eta")
    p = add("orders", _cmd_orders, "24-scaled cusp orders on a chosen level")
    p.add_argument("eta")
    p.add_argument("--on", type=int)
    p = add("factorize", _cmd_factorize, "search one factorization on a level")
    p.add_argument("eta")
    p.add_argument("--on", type=int)
    p = add("factors", _cmd_factors, "all factors on a level, trivial ones included")
    p.add_argument("eta")
    p.add_argument("--on", type=int)
    p = add("quasi", _cmd_quasi, "no factorization on the quotient's own level?")
    p.add_argument("eta")
    p = add("irreducible", _cmd_irreducible, "three-valued irreducibility verdict")
    p.add_argument("eta")
    p.add_argument("--cap", type=int)
    p = add("minlevel", _cmd_minlevel, "least level admitting a factorization")
    p.add_argument("eta")
    p.add_argument("--cap", type=int)
    p = add("lower", _cmd_lower, "project to a divisor level")
    p.add_argument("eta")
    p.add_argument("--from", dest="from_level", type=int)
    p.add_argument("--to", type=int, required=True)
    p = add("atkin", _cmd_atkin, "Atkin-Lehner involution by an exact divisor")
    p.add_argument("eta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int)
    p = add("rescale", _cmd_rescale, "substitute z -> v z")
    p.add_argument("eta")
    p.add_argument("--by", type=int, required=True)
    p = add("compose", _cmd_compose, "tensor two coprime-level quotients")
    p.add_argument("eta")
    p.add_argument("eta2")
    p = add("extract", _cmd_extract, "primitive quotient and rescaling factor")
    p.add_argument("eta")
    p = add("bound", _cmd_bound, "least-factorization-level bound")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--corollary", action="store_true")
    p = add("qexp", _cmd_qexp, "exact expansion on the fractional grid")
    p.add_argument("eta")
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    p = add("verify", _cmd_verify, "check an identity by series expansion")
    p.add_argument("eta")
    p.add_argument("--factors", nargs="+", required=True)
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    return top


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 2
        return CommandResult(exit_code=2 if code else 0, json={"error": "bad arguments"})
    try:
        payload = args.fn(args)
    except (EnumerationBudgetError, SeriesBudgetError) as e:
        return CommandResult(exit_code=3, json={"error": str(e)})
    except (EtaParseError, ValueError, LookupError) as e:
        return CommandResult(exit_code=2, json={"error": str(e)})
    return CommandResult(exit_code=0, json=payload)


def _human(doc: dict, indent: str = "") -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_human(value, indent + "  "))
        elif isinstance(value, list):
            lines.append(f"{indent}{key}: " + ", ".join(str(v) for v in value))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    want_json = "--json" in argv
    result = run(argv)
    if result.exit_code == 0:
        print(json.dumps(result.json) if want_json else _human(result.json))
    else:
        print(json.dumps(result.json) if want_json else _human(result.json), file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
