"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error (including the rank bound),
2 mathematically invalid input, 3 internal validation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import __version__, cache
from .checks import run_all
from .config import override_max_rank
from .errors import InvalidInputError, RankBoundError, ValidationError
from .export import export_dot, hasse_dot
from .kostka import kostka_foulkes
from .orbits import (Algebra, G2_CHAIN, G2_ORBIT_DIMS, as_label, closure_poset, orbit_dimension,
                     parse_g2_orbit, parse_partition)
from .ratsmooth import brion_zero_check, rational_singular_locus, stalk_poincare
from .springer import springer_correspondence

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VALIDATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _algebra(args) -> Algebra:
    fam = args.type.upper()
    if fam == "G2":
        if args.rank not in (None, 2):
            raise InvalidInputError("G2 has rank 2")
        return Algebra("G2", 2)
    if args.rank is None:
        raise UsageError(f"--rank is required for type {fam}")
    return Algebra(fam, args.rank)


def _classical(args) -> Algebra:
    alg = _algebra(args)
    if not alg.is_classical:
        raise InvalidInputError(f"{args.command} is only available for classical types, not {alg.name}")
    return alg


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.rstrip('_')} is required")


# -- commands -----------------------------------------------------------------------------

def cmd_orbits(args, out):
    alg = _algebra(args)
    if alg.family == "G2":
        rows = [{"orbit": o, "dimension": G2_ORBIT_DIMS[o]} for o in G2_CHAIN[::-1]]
        if args.dot:
            raise UsageError("--dot is only available for classical types")
    else:
        poset = closure_poset(alg)
        rows = [{"orbit": str(o), "dimension": poset.dims[o]} for o in poset.nodes]
        if args.dot:
            with open(args.dot, "w") as fh:
                fh.write(hasse_dot(alg, poset.nodes))
    if args.json:
        out.write(_dump({"algebra": alg.name, "orbits": rows}))
    else:
        for r in rows:
            out.write(f"{r['orbit']}\t{r['dimension']}\n")


def cmd_dim(args, out):
    _need(args, "orbit")
    alg = _algebra(args)
    if alg.family == "G2":
        label = parse_g2_orbit(args.orbit)
        d = G2_ORBIT_DIMS[label]
    else:
        label = as_label(alg, args.orbit)
        d = orbit_dimension(alg, label)
    if args.json:
        out.write(_dump({"algebra": alg.name, "orbit": str(label), "dimension": d}))
    else:
        out.write(f"{d}\n")


def cmd_kf(args, out):
    _need(args, "lambda_", "mu")
    lam, mu = parse_partition(args.lambda_), parse_partition(args.mu)
    poly = kostka_foulkes(lam, mu)
    if args.json:
        out.write(_dump({"lambda": list(lam), "mu": list(mu), "coefficients": list(poly.coefficient_list())}))
    else:
        out.write(f"{poly}\n")


def cmd_stalk(args, out):
    lam = args.orbit or args.lambda_
    mu = args.at or args.mu
    if lam is None or mu is None:
        raise UsageError("give the orbit (--orbit or --lambda) and the point (--at or --mu)")
    alg = _classical(args)
    poly = stalk_poincare(alg, lam, mu)
    if args.json:
        out.write(_dump({"algebra": alg.name, "lambda": str(as_label(alg, lam)), "mu": str(as_label(alg, mu)),
                         "stalk": list(poly.coeffs), "trivial": poly.is_one()}))
    else:
        out.write(f"{poly}\n")


def cmd_ratsing(args, out):
    _need(args, "orbit")
    alg = _classical(args)
    report = rational_singular_locus(alg, args.orbit)
    if args.dot:
        export_dot(report, args.dot)
    if args.json:
        out.write(_dump(report.to_json()))
        return
    out.write(f"{alg.name} closure of {report.lam}\n")
    for e in report.entries:
        flag = "smooth" if e.rationally_smooth else "singular"
        out.write(f"  {str(e.mu):<20} dim {e.dimension:<4} stalk {e.stalk}  {flag}\n")
    if report.rat_sing_maximal:
        out.write("rational singular locus: closure of " + ", ".join(map(str, report.rat_sing_maximal)) + "\n")
    else:
        out.write("rationally smooth\n")


def cmd_brion0(args, out):
    _need(args, "orbit")
    alg = _algebra(args)
    rec = brion_zero_check(alg, args.orbit)
    if args.json:
        out.write(_dump(rec.to_json()))
    else:
        verdict = "passes" if rec.passes else "fails"
        out.write(f"dim X = {rec.dim_x}, Brion sum = {rec.brion_sum}: {verdict}\n")


def cmd_springer(args, out):
    alg = _classical(args)
    smap = springer_correspondence(alg)
    rows = [{"orbit": str(o), "localSystem": ls, "character": str(irr)}
            for o in closure_poset(alg).nodes for ls, irr in smap.blocks[o]]
    if args.json:
        out.write(_dump({"algebra": alg.name, "correspondence": rows}))
    else:
        for r in rows:
            out.write(f"{r['orbit']}\t{r['localSystem']}\t{r['character']}\n")


def cmd_selftest(args, out):
    results = run_all(args.max_rank)
    total = 0.0
    for r in results:
        total += r.seconds
        out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<26} {r.seconds:7.2f}s  {r.detail}\n")
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed in {total:.2f}s\n")
    return EXIT_VALIDATION if failed else EXIT_OK


def cmd_cache_clear(args, out):
    n = cache.clear()
    out.write(f"removed {n} cache file{'s' if n != 1 else ''} from {cache.cache_dir()}\n")


COMMANDS = {
    "orbits": (cmd_orbits, "list the nilpotent orbits with their dimensions", ("type", "json", "dot")),
    "dim": (cmd_dim, "dimension of one orbit", ("type", "orbit", "json")),
    "kf": (cmd_kf, "Kostka-Foulkes polynomial K_{lambda,mu}(q)", ("lambda", "mu", "json")),
    "stalk": (cmd_stalk, "normalized stalk polynomial of an orbit closure at an orbit",
              ("type", "orbit", "at", "lambda", "mu", "json")),
    "ratsing": (cmd_ratsing, "rational singular locus of an orbit closure", ("type", "orbit", "json", "dot")),
    "brion0": (cmd_brion0, "Brion's dimension test at the origin", ("type", "orbit", "json")),
    "springer": (cmd_springer, "Springer correspondence table", ("type", "json")),
    "selftest": (cmd_selftest, "run the consistency gates and worked examples", ()),
    "cache-clear": (cmd_cache_clear, "delete the on-disk cache", ()),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilrat", description="Rational smoothness of nilpotent orbit closures.")
    parser.add_argument("--version", action="version", version=f"nilrat {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log cache and solver activity")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    for name, (_, help_text, flags) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--max-rank", type=int, metavar="N", help="override the per-family rank bound")
        if "type" in flags:
            p.add_argument("--type", required=True, help="A, B, C, D or G2")
            p.add_argument("--rank", type=int)
        if "orbit" in flags:
            p.add_argument("--orbit", help="partition such as 3,3 (very even: 4,4:I)")
        if "at" in flags:
            p.add_argument("--at", help="orbit of the point")
        if "lambda" in flags:
            p.add_argument("--lambda", dest="lambda_", metavar="LAMBDA")
        if "mu" in flags:
            p.add_argument("--mu")
        if "json" in flags:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        if "dot" in flags:
            p.add_argument("--dot", metavar="PATH", help="write the Hasse diagram in DOT format")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help and --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = COMMANDS[args.command][0]
    try:
        with override_max_rank(args.max_rank):
            code = handler(args, out)
    except UsageError as exc:
        err.write(f"nilrat {args.command}: {exc}\n")
        return EXIT_USAGE
    except InvalidInputError as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    except RankBoundError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ValidationError as exc:
        err.write(f"internal validation failed: {exc}\n")
        return EXIT_VALIDATION
    except OSError as exc:
        err.write(f"I/O error: {exc}\n")
        return EXIT_USAGE
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())
