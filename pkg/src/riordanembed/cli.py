"""Command-line interface: ``riordanembed <command> ...`` (or ``python -m riordanembed``).

Every command is a thin adapter over the library.  Exit codes: 0 ok,
1 verification failure, 2 parse/usage error, 3 invariant violation,
4 not embeddable, 5 I/O or network failure.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import checks, oeis
from .cfrac import JFraction, SFraction, contract_even, contract_odd, j_to_series, s_to_series
from .embedding import cascade, decompose, embed
from .errors import GFSyntaxError, InvariantViolation, NetworkUnavailable, NotEmbeddable, RiordanError
from .gfparse import evaluate
from .orthopoly import (InterleavedFamily, Recurrence, interleaved_moment_matrix, moment_matrix,
                        polynomials)
from .prodmat import (BidiagonalSpec, ProductionMatrix, bidiagonal_construction, bidiagonal_matrix,
                      generate, is_riordan_production, production_of, riordan_violation, tridiagonal)
from .riordan import RiordanArray, triangle
from .sequences import EventuallyPeriodic
from .triangle import Triangle
from .triangle import inverse as tri_inverse
from .triangle import parse_json_rows, render

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_INVARIANT, EXIT_EMBED, EXIT_IO = range(6)


@dataclass
class Config:
    order: int = 32
    rows: int = 8
    format: str = "text"
    offline: bool = False

    def __post_init__(self):
        if self.order < self.rows:
            raise InvariantViolation("--order (%d) must be at least --rows (%d)" % (self.order, self.rows))


class _Out:
    """Collects named sections; prints text blocks or one JSON document."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.doc = {}

    def matrix(self, name, rows):
        rows = rows.rows if hasattr(rows, "rows") else rows
        if self.cfg.format == "json":
            self.doc[name] = [[str(v) for v in r] for r in rows]
        else:
            print("# %s" % name)
            print(render(rows, self.cfg.format).rstrip("\n"))
            print()

    def value(self, name, value):
        if self.cfg.format == "json":
            self.doc[name] = _jsonable(value)
        else:
            if isinstance(value, (list, tuple)):
                value = ", ".join(str(v) for v in value)
            print("%s: %s" % (name, value))

    def finish(self):
        if self.cfg.format == "json":
            print(json.dumps(self.doc, indent=2))


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return [_jsonable(x) for x in v]


def _prefix(s, n):
    return [c.numerator if c.denominator == 1 else c for c in s.coeffs[:n]]


def _array(cfg, g, f):
    return RiordanArray(evaluate(g, cfg.order), evaluate(f, cfg.order))


def _describe(out, name, R, cfg, rows=None):
    rows = min(cfg.rows if rows is None else rows, R.order)
    out.value("%s.g" % name, _prefix(R.g, rows))
    out.value("%s.f" % name, _prefix(R.f, rows))
    out.matrix(name, triangle(R, rows))


def _seq(text):
    return EventuallyPeriodic.parse(text)


# commands -----------------------------------------------------------------------

def cmd_show(args, cfg, out):
    R = _array(cfg, args.g, args.f)
    out.matrix("triangle", triangle(R, cfg.rows))


def cmd_decompose(args, cfg, out):
    A, B = decompose(_array(cfg, args.g, args.f))
    _describe(out, "A", A, cfg)
    _describe(out, "B", B, cfg)


def cmd_embed(args, cfg, out):
    R = embed(_array(cfg, args.u, args.v))
    _describe(out, "R", R, cfg)


def cmd_cascade(args, cfg, out):
    tree = cascade(_array(cfg, args.g, args.f), args.depth)
    for node in tree.walk():
        _describe(out, node.path or "R", node.array, cfg)


def cmd_prodmat(args, cfg, out):
    if args.json:
        M = Triangle(parse_json_rows(Path(args.json).read_text()))
    else:
        if args.g is None or args.f is None:
            raise GFSyntaxError("prodmat needs G and F or --json", "", 0)
        M = triangle(_array(cfg, args.g, args.f), cfg.rows)
    P = production_of(M)
    out.matrix("production", P.rows)
    out.value("riordan_production", is_riordan_production(P))
    bad = riordan_violation(P)
    if bad is not None:
        out.value("first_violation", list(bad))


def cmd_genfrom(args, cfg, out):
    if args.json:
        P = ProductionMatrix(parse_json_rows(Path(args.json).read_text()))
    else:
        j = JFraction.parse(args.tridiag)
        P = tridiagonal(j.b, j.c, cfg.rows)
    out.matrix("generated", generate(P, cfg.rows))


def cmd_bidiag(args, cfg, out):
    spec = BidiagonalSpec(EventuallyPeriodic(_seq(args.period).period, _seq(args.pre).period if args.pre else ()))
    P, T = bidiagonal_construction(spec, cfg.rows)
    out.value("spec", spec.spec())
    out.matrix("L_inverse", tri_inverse(bidiagonal_matrix(spec, cfg.rows)))
    out.matrix("production", P.rows)
    out.matrix("generated", T)
    out.value("riordan_production", is_riordan_production(P))


def cmd_cfrac(args, cfg, out):
    text = args.fraction.strip()
    if text.startswith("j"):
        s = j_to_series(JFraction.parse(text), cfg.rows)
    else:
        s = s_to_series(SFraction.parse(text), cfg.rows)
    out.value("series", _prefix(s, cfg.rows))


def cmd_contract(args, cfg, out):
    pre = _seq(args.pre).period if args.pre else ()
    s = SFraction(EventuallyPeriodic(_seq(args.period).period, pre))
    n = max(cfg.rows, 6)
    for label, j in (("even", contract_even(s)), ("odd", contract_odd(s))):
        out.value("%s.spec" % label, j.spec())
        out.value("%s.b" % label, j.b.take(n))
        out.value("%s.c" % label, j.c.take(n))


def _recurrence(spec, b, c, p1):
    if spec:
        return Recurrence.parse(spec)
    if b is None or c is None:
        raise GFSyntaxError("need a recurrence: 'rec b=[..] c=[..] p1=..' or --b/--c", "", 0)
    return Recurrence(_seq(b), _seq(c), Fraction(p1) if p1 is not None else None)


def cmd_orthopoly(args, cfg, out):
    rec = _recurrence(args.rec, args.b, args.c, args.p1)
    if args.what == "polys":
        out.matrix("polynomials", polynomials(rec, cfg.rows))
    elif args.what == "moments":
        out.matrix("moments", moment_matrix(rec, cfg.rows))
    else:
        q = _recurrence(args.q, args.qb, args.qc, args.qp1)
        out.matrix("interleaved", interleaved_moment_matrix(InterleavedFamily(rec, q), cfg.rows))


def cmd_oeis(args, cfg, out):
    terms = [int(t) for t in args.terms.replace(" ", "").split(",") if t]
    results = oeis.lookup(oeis.SequenceQuery(terms, args.max), offline=cfg.offline)
    if cfg.format == "json":
        out.doc["results"] = [{"id": r.id, "name": r.name, "matched": r.matched_prefix_length}
                              for r in results]
    else:
        for r in results:
            print("%s  %s  (matched %d)" % (r.id, r.name, r.matched_prefix_length))


def cmd_verify_paper(args, cfg, out):
    results = checks.run_all()
    failed = [r for r in results if not r.passed]
    if cfg.format == "json":
        out.doc.update({"total": len(results), "passed": len(results) - len(failed),
                        "failed": len(failed), "checks": [r.asdict() for r in results]})
    else:
        for r in results:
            print("%s  [%d] %s" % ("PASS" if r.passed else "FAIL", r.criterion, r.name))
            if not r.passed:
                print("      expected: %s\n      actual:   %s" % (r.expected, r.actual))
        print("%d/%d checks passed" % (len(results) - len(failed), len(results)))
    if failed:
        if cfg.format != "json":
            print("failing: " + ", ".join(r.name for r in failed), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# parser -------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=argparse.SUPPRESS, help="series truncation (default 32)")
    common.add_argument("--rows", type=int, default=argparse.SUPPRESS, help="rows to print (default 8)")
    common.add_argument("--format", choices=["text", "csv", "json"], default=argparse.SUPPRESS)
    common.add_argument("--offline", action="store_true", default=argparse.SUPPRESS,
                        help="OEIS lookups use the cache only")

    parser = argparse.ArgumentParser(prog="riordanembed", parents=[common],
                                     description="Riordan arrays, their embedded arrays, production matrices "
                                                 "and moment matrices in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("show", cmd_show, "print the triangle of (G, F)")
    p.add_argument("g")
    p.add_argument("f")

    p = add("decompose", cmd_decompose, "the embedded arrays A and B of (G, F)")
    p.add_argument("g")
    p.add_argument("f")

    p = add("embed", cmd_embed, "embed A = (U, V) into a larger Riordan array")
    p.add_argument("u")
    p.add_argument("v")

    p = add("cascade", cmd_cascade, "repeated decomposition tree")
    p.add_argument("g")
    p.add_argument("f")
    p.add_argument("--depth", type=int, default=2)

    p = add("prodmat", cmd_prodmat, "production matrix of (G, F) or of a JSON triangle")
    p.add_argument("g", nargs="?")
    p.add_argument("f", nargs="?")
    p.add_argument("--json", help="file holding a triangle as a JSON array of rows")

    p = add("genfrom", cmd_genfrom, "generate a matrix from a production matrix")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--json", help="file holding production-matrix rows as JSON")
    g.add_argument("--tridiag", help="tridiagonal data 'b=[..]/[..] c=[..]/[..]'")

    p = add("bidiag", cmd_bidiag, "the inverse-bidiagonal production-matrix construction")
    p.add_argument("--period", required=True, help="e.g. 2,3")
    p.add_argument("--pre", help="optional preperiod, e.g. 1")

    p = add("cfrac", cmd_cfrac, "expand an S- or J-fraction")
    p.add_argument("fraction", help="'s: pre=[] period=[2,3]' or 'j: b=[2]/[8,5,7] c=[]/[6,10,15]'")

    p = add("contract", cmd_contract, "even and odd J-fraction contractions of an S-fraction")
    p.add_argument("--period", required=True)
    p.add_argument("--pre")

    p = add("orthopoly", cmd_orthopoly, "polynomial families from three-term recurrences")
    p.add_argument("what", choices=["polys", "moments", "interleaved"])
    p.add_argument("rec", nargs="?", help="'rec b=[7] c=[12] p1=-3'")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--p1")
    p.add_argument("--q", help="second recurrence for 'interleaved'")
    p.add_argument("--qb")
    p.add_argument("--qc")
    p.add_argument("--qp1")

    p = add("oeis", cmd_oeis, "look a sequence up in the OEIS")
    p.add_argument("terms", help="comma-separated integers")
    p.add_argument("--max", type=int, default=5)

    add("verify-paper", cmd_verify_paper, "recompute every worked example and compare")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(order=getattr(args, "order", 32), rows=getattr(args, "rows", 8),
                     format=getattr(args, "format", "text"), offline=getattr(args, "offline", False))
    except InvariantViolation as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    out = _Out(cfg)
    try:
        code = args.func(args, cfg, out) or EXIT_OK
        out.finish()
        return code
    except GFSyntaxError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except NotEmbeddable as exc:
        print("not embeddable: %s" % exc, file=sys.stderr)
        return EXIT_EMBED
    except (NetworkUnavailable, OSError) as exc:
        print("I/O error: %s" % exc, file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE if not isinstance(exc, RiordanError) else EXIT_INVARIANT
    except RiordanError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
