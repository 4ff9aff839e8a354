"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 budget exhausted, 3 self-check or
verification failure.  Counts are printed as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import formulas as fm
from .constructions import CONSTRUCTION_PARAMS, CONSTRUCTIONS, construct
from .counting import BudgetExceeded, count_copies, is_free
from .dsl import parse_poset
from .families import (
    SetFamily,
    format_family,
    is_antichain,
    level_union,
    parse_family,
    power_set,
)
from .posets import automorphism_count, height, is_isomorphic, multilevel_parts
from .profiles import beta, chain_profile, gamma, gamma_level, maximize_level_weight, profile
from .search import (
    EXACT_CAP,
    SelfCheckError,
    antichain_max_beta,
    antichain_max_gamma,
    conjecture_ratio,
    la_exact,
    la_levels,
)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- output


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return "inf" if math.isinf(value) else repr(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, SetFamily):
        return [list(s) for s in value.sets()]
    return value


def _emit(args, payload: dict) -> None:
    data = _jsonable(payload)
    if args.format == "tsv":
        for key, value in data.items():
            text = value if isinstance(value, str) else json.dumps(value, separators=(",", ":"))
            print(f"{key}\t{text}")
    else:
        print(json.dumps(data, separators=(",", ":")))


# ---------------------------------------------------------------- inputs


def _poset(text: str):
    return parse_poset(text)


def _poset_list(text: str):
    # Split on top-level commas only; commas inside parentheses belong to one poset.
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return [parse_poset(part) for part in out if part.strip()]


def _family(args) -> SetFamily:
    text = args.family
    if text == "all":
        return power_set(_need_n(args))
    if text.startswith("levels:"):
        try:
            levels = [int(tok) for tok in text[len("levels:"):].split(",") if tok]
        except ValueError:
            raise UsageError(f"bad level list in {text!r}") from None
        return level_union(_need_n(args), levels)
    path = Path(text)
    if not path.exists():
        raise UsageError(f"--family: expected 'all', 'levels:i,j,..' or a file, got {text!r}")
    fam = parse_family(path.read_text(), hex_masks=args.hex)
    if args.n is not None and args.n != fam.n:
        raise UsageError(f"--n {args.n} disagrees with n={fam.n} in {text}")
    return fam


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


# ---------------------------------------------------------------- commands


def cmd_poset(args) -> int:
    if args.action == "show":
        p = _poset(args.expr)
        _emit(args, {
            "poset": p.render(),
            "elements": p.m,
            "height": height(p),
            "relations": sorted(p.relations()),
            "multilevel": multilevel_parts(p),
            "automorphisms": automorphism_count(p),
        })
    else:
        if len(args.expr2) != 1:
            raise UsageError("poset iso needs two expressions")
        _emit(args, {"isomorphic": is_isomorphic(_poset(args.expr), _poset(args.expr2[0]))})
    return EXIT_OK


def cmd_family(args) -> int:
    if args.action == "gen":
        if args.source is not None:
            raise UsageError("family gen takes its input from --family")
        sys.stdout.write(format_family(_family(args), hex_masks=args.hex))
        return EXIT_OK
    if args.source is None:
        raise UsageError("family read needs a file argument")
    fam = parse_family(Path(args.source).read_text(), hex_masks=args.hex)
    _emit(args, {"n": fam.n, "size": len(fam), "antichain": is_antichain(fam),
                 "profile": profile(fam), "members": fam})
    return EXIT_OK


def cmd_count(args) -> int:
    _emit(args, {"value": count_copies(_poset(args.poset), _family(args), args.budget)})
    return EXIT_OK


def cmd_free(args) -> int:
    _emit(args, {"free": is_free(_poset_list(args.forbid), _family(args), args.budget)})
    return EXIT_OK


def cmd_profile(args) -> int:
    fam = _family(args)
    payload = {"alpha": profile(fam)}
    if args.l is not None:
        payload["chain_profile"] = {",".join(map(str, k)): v for k, v in chain_profile(fam, args.l).items()}
    _emit(args, payload)
    return EXIT_OK


def cmd_beta(args) -> int:
    _emit(args, {"beta": beta(_family(args), args.r, args.budget)})
    return EXIT_OK


def cmd_gamma(args) -> int:
    table = gamma(_family(args), args.r, args.budget)
    _emit(args, {"gamma": {f"{i},{j}": v for (i, j), v in table.items()}})
    return EXIT_OK


def cmd_gamma_level(args) -> int:
    _emit(args, {"value": gamma_level(args.n, args.m, args.r, args.i, args.j)})
    return EXIT_OK


def _weight(text: str, n: int, l: int):
    if text == "ones":
        return lambda sizes: 1
    if text.startswith("fork:"):
        r = int(text[5:])
        return lambda sizes: math.comb(math.comb(sizes[-1], sizes[-1] // 2), r)
    if text.startswith("list:"):
        values = [int(tok) for tok in text[5:].split(",")]
        if l != 1 or len(values) != n + 1:
            raise UsageError("list weights need --l 1 and n+1 values")
        if any(v < 0 for v in values):
            raise UsageError("weights must be non-negative")
        return lambda sizes: values[sizes[0]]
    raise UsageError(f"unknown weight {text!r}; use ones, fork:R or list:w0,..,wn")


def cmd_level_opt(args) -> int:
    levels, value = maximize_level_weight(args.n, args.k, args.l, _weight(args.weight, args.n, args.l))
    _emit(args, {"value": value, "levels": list(levels)})
    return EXIT_OK


def _oracle(name: str, budget):
    if name == "chain":
        return fm.chain_oracle
    if name == "exact":
        return lambda m, q: la_exact(m, [_chain_above(q)], q, budget=budget).value
    if name == "levels":
        return lambda m, q: la_levels(m, [_chain_above(q)], q, budget=budget).value
    raise UsageError(f"unknown oracle {name!r}")


def _chain_above(q):
    from .posets import chain
    return chain(height(q) + 1)


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"formula {args.name} needs {' '.join(missing)}")


def _arg_value(av: fm.ArgValue) -> dict:
    out = {"value": av.value, "arg": list(av.arg)}
    if av.levels:
        out["levels"] = list(av.levels)
    return out


def cmd_formula(args) -> int:
    name = args.name
    if name == "sperner-erdos":
        _require(args, "n", "k")
        payload = {"value": fm.sperner_erdos(args.n, args.k)}
    elif name == "chain-chain":
        _require(args, "n", "k")
        payload = _arg_value(fm.la_chain_chain(args.n, args.k))
    elif name == "easy":
        _require(args, "case", "n")
        payload = {"value": fm.easy_value(args.case, args.n, args.r if args.r is not None else 1)}
    elif name == "p3-fork":
        _require(args, "n", "r")
        payload = _arg_value(fm.la_p3_fork(args.n, args.r))
    elif name == "p4-diamond":
        _require(args, "n", "r")
        payload = _arg_value(fm.la_p4_diamond(args.n, args.r))
    elif name == "diamond-bounds":
        _require(args, "n", "k", "l")
        b = fm.diamond_bounds(args.n, args.k, args.l)
        payload = {"bounds": {"lower": b.lower, "upper": b.upper}}
    elif name == "rtuples":
        _require(args, "n", "r")
        rec = fm.rtuples_bounds(args.n, args.r)
        payload = {"bounds": {k: v for k, v in rec.items() if k not in ("n", "r")}}
    elif name == "beta2-level":
        _require(args, "n", "i")
        payload = _arg_value(fm.beta2_level_bound(args.n, args.i))
    elif name == "otimes-bound":
        _require(args, "n", "q1", "r", "q2")
        payload = {"value": fm.compose_otimes_bound(args.n, _poset(args.q1), args.r, _poset(args.q2),
                                                    _oracle(args.oracle, args.budget))}
    elif name == "oplus-bound":
        _require(args, "n", "q1", "r")
        payload = {"value": fm.compose_oplus_bound(args.n, _poset(args.q1), args.r,
                                                   _oracle(args.oracle, args.budget))}
    elif name == "multi1":
        _require(args, "n", "mid", "r", "s")
        payload = _arg_value(fm.multi1_value(args.n, args.mid, args.r, args.s))
    elif name == "n-two-level":
        _require(args, "n", "i", "j")
        b = fm.n_two_level_bounds(args.n, args.i, args.j)
        payload = {"bounds": {"lower": b.lower, "upper": b.upper}}
    elif name == "constants":
        payload = {"constants": fm.numeric_constants()}
    elif name == "cp":
        _require(args, "p")
        payload = {"value": fm.c_p(args.p)}
    else:  # argparse restricts the choices
        raise UsageError(f"unknown formula {name!r}")
    _emit(args, payload)
    return EXIT_OK


def _search_payload(result) -> dict:
    payload = {"value": result.value, "exact": result.exact,
               "witnesses": result.witnesses, "explored": result.explored}
    if result.levels is not None:
        payload["levels"] = list(result.levels)
    return payload


def cmd_la(args) -> int:
    forbidden = _poset_list(args.forbid)
    q = _poset(args.count)
    if args.action == "exact":
        result = la_exact(args.n, forbidden, q, exclude_empty_and_full=args.exclude_extremes,
                          budget=args.budget, witnesses=args.witnesses, exact_cap=args.exact_cap)
    else:
        if args.exclude_extremes:
            raise UsageError("--exclude-extremes applies to 'la exact' only")
        result = la_levels(args.n, forbidden, q, budget=args.budget, witnesses=args.witnesses)
    _emit(args, _search_payload(result))
    return EXIT_OK if result.exact else EXIT_BUDGET


def cmd_antichain_max(args) -> int:
    fn = antichain_max_beta if args.kind == "beta" else antichain_max_gamma
    result = fn(args.n, args.r, exact_cap=args.exact_cap, budget=args.budget)
    _emit(args, _search_payload(result))
    return EXIT_OK if result.exact else EXIT_BUDGET


def cmd_construct(args) -> int:
    params = {p: getattr(args, p) for p in CONSTRUCTION_PARAMS.get(args.name, ()) if getattr(args, p) is not None}
    fam = construct(args.name, args.n, **params)
    if args.text:
        sys.stdout.write(format_family(fam, hex_masks=args.hex))
    else:
        _emit(args, {"name": args.name, "n": fam.n, "size": len(fam), "members": fam})
    return EXIT_OK


def cmd_ratio(args) -> int:
    ratio = conjecture_ratio(args.n, _poset_list(args.forbid), _poset(args.count), budget=args.budget)
    _emit(args, {"ratio": ratio})
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suites(args.suites or ["all"], seed=args.seed)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


# ---------------------------------------------------------------- parser


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--budget", type=_positive, default=None,
                        help="search node limit (default: SUBPOSET_LAB_BUDGET or 200000000)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized suites")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="accepted for compatibility; work runs on one thread")
    common.add_argument("--exact-cap", type=_positive, default=EXACT_CAP,
                        help=f"largest n searched exactly (default {EXACT_CAP})")

    fam_opts = _Parser(add_help=False)
    fam_opts.add_argument("--n", type=int)
    fam_opts.add_argument("--family", default="all", help="all | levels:i,j,.. | path to a family file")
    fam_opts.add_argument("--hex", action="store_true", help="family files hold hex masks")

    parser = _Parser(prog="subposet-lab", description="Counting posets in set families.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poset", parents=[common], help="inspect poset expressions")
    p.add_argument("action", choices=("show", "iso"))
    p.add_argument("expr")
    p.add_argument("expr2", nargs="*")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("family", parents=[common, fam_opts], help="generate or read family files")
    p.add_argument("action", choices=("gen", "read"))
    p.add_argument("source", nargs="?")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("count", parents=[common, fam_opts], help="copies of a poset in a family")
    p.add_argument("--poset", required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("free", parents=[common, fam_opts], help="is the family free of the posets")
    p.add_argument("--forbid", required=True)
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("profile", parents=[common, fam_opts], help="size and chain profiles")
    p.add_argument("--l", type=_positive)
    p.set_defaults(func=cmd_profile)

    for name, fn in (("beta", cmd_beta), ("gamma", cmd_gamma)):
        p = sub.add_parser(name, parents=[common, fam_opts], help=f"{name} profile of r-subsets")
        p.add_argument("--r", type=int, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("gamma-level", parents=[common], help="gamma entry of a full level")
    for opt in ("n", "m", "r", "i", "j"):
        p.add_argument(f"--{opt}", type=int, required=True)
    p.set_defaults(func=cmd_gamma_level)

    p = sub.add_parser("level-opt", parents=[common], help="best union of full levels for a weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--weight", default="ones", help="ones | fork:R | list:w0,..,wn")
    p.set_defaults(func=cmd_level_opt)

    p = sub.add_parser("formula", parents=[common], help="closed-form values and bounds")
    p.add_argument("name", choices=(
        "sperner-erdos", "chain-chain", "easy", "p3-fork", "p4-diamond", "diamond-bounds",
        "rtuples", "beta2-level", "otimes-bound", "oplus-bound", "multi1", "n-two-level",
        "constants", "cp"))
    for opt in ("n", "k", "l", "r", "s", "i", "j", "p", "mid"):
        p.add_argument(f"--{opt}", type=int)
    p.add_argument("--case", choices=("a", "b", "c", "d"))
    p.add_argument("--q1")
    p.add_argument("--q2")
    p.add_argument("--oracle", choices=("chain", "exact", "levels"), default="chain")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("la", parents=[common], help="extremal search")
    p.add_argument("action", choices=("exact", "levels"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True, help="comma-separated poset expressions")
    p.add_argument("--count", required=True)
    p.add_argument("--exclude-extremes", action="store_true")
    p.add_argument("--witnesses", type=int, default=1)
    p.set_defaults(func=cmd_la)

    p = sub.add_parser("antichain-max", parents=[common], help="best beta/gamma over antichains")
    p.add_argument("kind", choices=("beta", "gamma"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_antichain_max)

    p = sub.add_parser("construct", parents=[common], help="named extremal families")
    p.add_argument("name", choices=sorted(CONSTRUCTIONS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--text", action="store_true", help="print the family file format")
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("ratio", parents=[common], help="exact optimum over level-union optimum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--count", required=True)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("verify", parents=[common], help="run acceptance suites")
    p.add_argument("suites", nargs="*", metavar="suite",
                   help="'all' or any of: " + ", ".join(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SelfCheckError as exc:
        print(f"self-check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
