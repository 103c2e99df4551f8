"""Command-line front end.

Each subcommand reads an algebra description (a JSON file via --spec, or
the same fields inline via --coeff/--sigma/--c/--variant), runs one of
the analysis engines and prints a report.  With --format json the report
is a single envelope object

    {"version", "command", "input", "result", "wall_time_s"}

serialized with sorted keys, so two runs with the same input and seed
produce byte-identical payloads apart from the wall time.  Text output
is a plain aligned rendering of the same payload.

Exit status is 0 whenever the analysis completed, whatever the
mathematical verdict (including "unknown"); input and validation
problems exit with status 2 and a message on standard error.

The environment variable DICKSON_MAX_EXHAUSTIVE overrides the default
10^6-pair cap on exhaustive zero-divisor searches.
"""

import argparse
import json
import random
import sys
import time

from . import __version__
from .analysis import (census, division_decide, enumerate_automorphisms,
                       group_structure, iso_test, subgroups,
                       wene_inner_check)
from .doubling import (compute_nuclei, mul_by_constants,
                       structure_constants, theorem_zero_divisor_witness)
from .parsing import (DescriptionError, algebra_from_document, load_document,
                      parse_element, parse_sigma)


def _add_algebra_flags(sub):
    sub.add_argument("--spec", metavar="FILE",
                     help="JSON file with the algebra description")
    sub.add_argument("--coeff", help='coefficient algebra, e.g. "gf(3,2)"')
    sub.add_argument("--sigma", help='automorphism, e.g. "frobenius:1"')
    sub.add_argument("--c", help='doubling constant, e.g. "0,1"')
    sub.add_argument("--variant",
                     choices=["commutative", "left", "middle", "right"],
                     help="product shape (default: commutative over "
                          "commutative coefficients, else left)")
    sub.add_argument("--allow-identity", action="store_true",
                     help="permit sigma = id")


def _add_common_flags(sub):
    sub.add_argument("--format", choices=["json", "text"], default="text")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for randomized property trials")


def _document(args):
    if args.spec is not None:
        if args.coeff or args.sigma or args.c:
            raise DescriptionError("give either --spec or inline flags, "
                                   "not both")
        return load_document(args.spec)
    if not (args.coeff and args.sigma and args.c):
        raise DescriptionError("need --spec FILE or all of --coeff, "
                               "--sigma, --c")
    doc = {"coeff": args.coeff, "sigma": args.sigma, "c": args.c}
    if args.variant:
        doc["variant"] = args.variant
    if args.allow_identity:
        doc["allow_identity"] = True
    return doc


def _taus(D, args):
    raw = getattr(args, "tau", None)
    if not raw:
        return None
    return [parse_sigma(D.coeff, t) for t in raw]


# -- result builders ---------------------------------------------------------

def _run_construct(args):
    doc = _document(args)
    D = algebra_from_document(doc)
    rng = random.Random(args.seed)
    trials = 200
    lam = D.adjoined()
    checks = {
        "unit_two_sided": True,
        "left_distributive": True,
        "right_distributive": True,
        "adjoined_square_is_c": D.mul(lam, lam) == D.element(D.c, D.coeff.zero()),
        "commutative": None,
        "matches_structure_constants": True,
    }
    table = structure_constants(D)
    one = D.unit()
    for _ in range(trials):
        x = D.random_element(rng)
        y = D.random_element(rng)
        z = D.random_element(rng)
        if D.mul(one, x) != x or D.mul(x, one) != x:
            checks["unit_two_sided"] = False
        if D.mul(x + y, z) != D.mul(x, z) + D.mul(y, z):
            checks["left_distributive"] = False
        if D.mul(z, x + y) != D.mul(z, x) + D.mul(z, y):
            checks["right_distributive"] = False
        if D.coeff.commutative:
            ok = D.mul(x, y) == D.mul(y, x)
            checks["commutative"] = ok and checks["commutative"] is not False
        if mul_by_constants(D, table, x, y) != D.mul(x, y):
            checks["matches_structure_constants"] = False
    return doc, {
        "algebra": D.describe(),
        "trials": trials,
        "checks": checks,
        "all_passed": all(v is not False for v in checks.values()),
    }


def _run_nuclei(args):
    doc = _document(args)
    D = algebra_from_document(doc)
    return doc, compute_nuclei(D).to_dict()


def _run_division(args):
    doc = _document(args)
    D = algebra_from_document(doc)
    return doc, division_decide(D).to_dict()


def _run_autgroup(args):
    doc = _document(args)
    D = algebra_from_document(doc)
    taus = _taus(D, args)
    report = enumerate_automorphisms(D, taus=taus)
    report = group_structure(D, report)
    result = report.to_dict()
    result["subgroups"] = subgroups(D, taus=taus).to_dict()
    return doc, result


def _run_iso(args):
    if not args.spec or not args.spec2:
        raise DescriptionError("iso needs --spec and --spec2")
    doc1 = load_document(args.spec)
    doc2 = load_document(args.spec2)
    D1 = algebra_from_document(doc1)
    D2 = algebra_from_document(doc2)
    verdict = iso_test(D1, D2)
    return {"first": doc1, "second": doc2}, verdict.to_dict()


def _run_census(args):
    report = census(args.p, args.n, limit=args.limit)
    return {"p": args.p, "n": args.n}, report.to_dict()


def _run_wene(args):
    doc = _document(args)
    D = algebra_from_document(doc)
    return doc, wene_inner_check(D).to_dict()


def _run_witness(args):
    doc = _document(args)
    D = algebra_from_document(doc)
    r = parse_element(D.coeff, args.r)
    s = parse_element(D.coeff, args.s)
    t = parse_element(D.coeff, args.t)
    pair, product = theorem_zero_divisor_witness(D, r, s, t)
    Dc = pair[0].alg
    return doc, {
        "algebra": Dc.describe(),
        "critical_c": Dc.coeff.literal(Dc.c),
        "pair": [pair[0].literal(), pair[1].literal()],
        "product": product.literal(),
        "product_is_zero": product == Dc.zero(),
    }


# -- rendering ---------------------------------------------------------------

def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return json.dumps(v)
    return str(v)


def _render(payload, indent=0, out=None):
    pad = "  " * indent
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        for k in payload:
            v = payload[k]
            if isinstance(v, dict) and v:
                out.append("%s%s:" % (pad, k))
                _render(v, indent + 1, out)
            elif isinstance(v, list) and len(json.dumps(v, default=str)) > 64:
                out.append("%s%s:" % (pad, k))
                for item in v:
                    if isinstance(item, dict):
                        out.append("%s  -" % pad)
                        _render(item, indent + 2, out)
                    else:
                        out.append("%s  - %s" % (pad, _scalar(item)))
            else:
                out.append("%s%-*s  %s"
                           % (pad, width + 1, str(k) + ":", _scalar(v)))
    else:
        out.append("%s%s" % (pad, _scalar(payload)))
    return out


def _emit(command, input_echo, result, fmt, started):
    envelope = {
        "version": __version__,
        "command": command,
        "input": input_echo,
        "result": result,
        "wall_time_s": round(time.monotonic() - started, 3),
    }
    if fmt == "json":
        print(json.dumps(envelope, indent=2, sort_keys=True, default=str))
    else:
        lines = []
        lines.append("command: %s" % command)
        _render(result, 0, lines)
        print("\n".join(lines))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dickson",
        description="Doubled-algebra toolkit: construction, nuclei, "
                    "division verdicts, automorphisms, isomorphism "
                    "testing, census.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("construct",
                          help="build the algebra and run identity trials")
    _add_algebra_flags(sub)
    _add_common_flags(sub)
    sub.set_defaults(run=_run_construct)

    sub = subs.add_parser("nuclei", help="left/middle/right nuclei, "
                                         "commutative center and center")
    _add_algebra_flags(sub)
    _add_common_flags(sub)
    sub.set_defaults(run=_run_nuclei)

    sub = subs.add_parser("division",
                          help="decide whether the algebra is division")
    _add_algebra_flags(sub)
    _add_common_flags(sub)
    sub.set_defaults(run=_run_division)

    sub = subs.add_parser("autgroup",
                          help="enumerate automorphisms and identify the "
                               "group structure")
    _add_algebra_flags(sub)
    _add_common_flags(sub)
    sub.add_argument("--tau", action="append", metavar="DESC",
                     help="candidate coefficient automorphism (repeatable); "
                          "quaternion default is id and the chosen sigma")
    sub.set_defaults(run=_run_autgroup)

    sub = subs.add_parser("iso", help="test two algebras for isomorphism")
    sub.add_argument("--spec", metavar="FILE", required=False)
    sub.add_argument("--spec2", metavar="FILE", required=False)
    _add_common_flags(sub)
    sub.set_defaults(run=_run_iso)

    sub = subs.add_parser("census",
                          help="isomorphism classes over GF(p^n) for all "
                               "sigma and all non-square c")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--limit", type=int, default=27,
                     help="largest p^n accepted (default 27)")
    _add_common_flags(sub)
    sub.set_defaults(run=_run_census)

    sub = subs.add_parser("wene",
                          help="check whether z -> w(z lambda) acts as "
                               "(sigma u, sigma v)")
    _add_algebra_flags(sub)
    _add_common_flags(sub)
    sub.set_defaults(run=_run_wene)

    sub = subs.add_parser("witness-zero-divisor",
                          help="build the zero-divisor pair attached to a "
                               "critical triple (r,s,t)")
    _add_algebra_flags(sub)
    _add_common_flags(sub)
    sub.add_argument("--r", required=True, help="element literal")
    sub.add_argument("--s", required=True, help="element literal")
    sub.add_argument("--t", required=True, help="element literal")
    sub.set_defaults(run=_run_witness)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        input_echo, result = args.run(args)
    except DescriptionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    _emit(args.command, input_echo, result, args.format, started)
    return 0


if __name__ == "__main__":
    sys.exit(main())
