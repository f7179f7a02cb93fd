"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 a check reported failures,
64 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys

from . import beta, global_ops
from .burnside import BurnsideElement, has_class_table, mul_via_sets, subgroup_classes
from .cache import LatticeCache, default_dir, table_to_json, warm
from .config import BurnsideError, override
from .group_core import inclusion_hom, symmetric_group
from .parsing import (ParseError, format_s2, parse_element, parse_group, parse_hom, parse_operator,
                      parse_operator2, parse_ring)
from .reports import Report

EXIT_OK, EXIT_ERROR, EXIT_FAILED, EXIT_USAGE = 0, 1, 2, 64

log = logging.getLogger("burnside_beta")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--group", help="group spec, e.g. S3, C4, S2wrS2, S2xS3, 'perm(3): (0 1), (0 1 2)'")
    p.add_argument("--coeff", help="coefficient ring: Z, Q, Zi, Qi or Z/n (default: from the literals)")
    p.add_argument("--degree", type=int, help="power / truncation degree")
    p.add_argument("--bound-lattice", type=int, help="largest group order with a full subgroup table")
    p.add_argument("--bound-set", type=int, help="largest G-set built explicitly")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--cache-dir", help="subgroup table cache (default: $BURNSIDE_CACHE)")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work runs serially")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="burnside", description="Exact Burnside-ring power operations and beta-rings.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    verb("marks", "table of marks")
    verb("classes", "conjugacy classes of subgroups")
    for name, h in (("mul", "product of two elements"), ("add", "sum of elements")):
        p = verb(name, h)
        p.add_argument("--elem", action="append", required=True)
        if name == "mul":
            p.add_argument("--via-sets", action="store_true", help="multiply through product G-sets")
    p = verb("restrict", "restriction along a homomorphism FROM -> GROUP")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--hom", default="incl")
    p.add_argument("--elem", required=True)
    p = verb("transfer", "induction from a subgroup SUB of GROUP")
    p.add_argument("--sub", required=True)
    p.add_argument("--hom", default="incl")
    p.add_argument("--elem", required=True)
    p = verb("deflate", "deflation along a homomorphism GROUP -> TO")
    p.add_argument("--to", required=True)
    p.add_argument("--hom", required=True)
    p.add_argument("--elem", required=True)
    p = verb("pow", "power operation P^m")
    p.add_argument("--elem", required=True)
    p.add_argument("--restricted", action="store_true", help="restrict to Sigma_m x G along the diagonal")
    p = verb("exps", "exponential sequence P^0 ... P^N")
    p.add_argument("--elem", required=True)
    p = verb("theta", "beta-operation theta(x)(a)")
    p.add_argument("--op", required=True)
    p.add_argument("--elem", required=True)
    p = verb("theta2", "two-variable operation theta^2(z)(c, d)")
    p.add_argument("--op2", required=True, help="'[S1xS1/e] + ...', 'Phi(<op>)' or '<op> # <op>'")
    p.add_argument("--elem", action="append", required=True)
    p = verb("plethysm", "x * y in the operator ring")
    p.add_argument("--op", action="append", required=True)
    p = verb("opmul", "transfer product x . y in the operator ring")
    p.add_argument("--op", action="append", required=True)
    p = verb("check", "run an identity checker")
    p.add_argument("suite", choices=["beta", "additive", "pairing", "power", "morphism", "assoc",
                                     "oracle", "transfer"])
    p.add_argument("--from", dest="source", help="source group for the morphism check")
    p.add_argument("--hom", default="incl")
    p = verb("obstruct", "obstructions to power operations with Z/n or Z[i] coefficients")
    p.add_argument("kind", choices=["zmod", "gaussian"])
    p.add_argument("n", nargs="?", type=int)
    p = verb("cache", "manage the subgroup table cache")
    p.add_argument("action", choices=["store", "load", "list", "clear", "export"])
    return parser


# -- helpers ------------------------------------------------------------------


def _group(args):
    if not args.group:
        raise UsageError("--group is required")
    try:
        return parse_group(args.group)
    except ParseError as exc:
        raise UsageError(str(exc)) from exc


def _elem(text, G, args):
    try:
        return parse_element(text, G, parse_ring(args.coeff))
    except ParseError as exc:
        raise UsageError(str(exc)) from exc


def _show(x: BurnsideElement) -> str:
    s = str(x)
    if x.group is symmetric_group(2):
        s += f"   (= {format_s2(x)})"
    return s


class Output:
    def __init__(self, as_json: bool, stream):
        self.as_json, self.stream = as_json, stream
        self.data: dict = {}

    def line(self, text=""):
        if not self.as_json:
            print(text, file=self.stream)

    def put(self, key, value):
        self.data[key] = value

    def close(self):
        if self.as_json:
            print(json.dumps(self.data, indent=1, sort_keys=False), file=self.stream)


def _report(out: Output, rep: Report) -> int:
    out.line(rep.summary())
    for e in rep.failures[:10]:
        out.line(f"  FAIL {e['axiom']} {e['instance']}: {e['lhs']} != {e['rhs']}")
    out.put("title", rep.title)
    out.put("notes", rep.notes)
    if rep.verdict:
        out.put("verdict", rep.verdict)
    out.put("entries", rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAILED


# -- verbs --------------------------------------------------------------------


def _marks(args, out):
    G = _group(args)
    tab = warm(G, args.cache_dir)
    for lab, order, gens in tab.legend():
        out.line(f"{lab}: order {order}, generated by {', '.join(gens) or '()'}")
    # rows are the G-sets G/H, columns the subgroups whose fixed points are counted
    rows = [[int(v) for v in row] for row in tab.marks.T]
    out.line()
    width = max(max(len(lab) for lab in tab.labels), 4)
    out.line(" " * (width + 1) + " ".join(f"{lab:>{width}}" for lab in tab.labels))
    for lab, row in zip(tab.labels, rows):
        out.line(f"{'G/' + lab:>{width}} " + " ".join(f"{v:>{width}}" for v in row))
    out.data.update(table_to_json(tab))
    out.put("marks_by_set", rows)
    return EXIT_OK


def _classes(args, out):
    G = _group(args)
    tab = warm(G, args.cache_dir)
    out.line(f"{G}: order {G.order}, {len(tab)} classes of subgroups")
    for lab, order, gens in tab.legend():
        out.line(f"  {lab}: order {order}, generated by {', '.join(gens) or '()'}")
    out.put("classes", table_to_json(tab)["classes"])
    return EXIT_OK


def _mul(args, out):
    G = _group(args)
    if len(args.elem) != 2:
        raise UsageError("mul takes exactly two --elem arguments")
    a, b = (_elem(e, G, args) for e in args.elem)
    z = mul_via_sets(a, b) if args.via_sets else a * b
    out.line(_show(z))
    out.put("result", z.to_json(args.group))
    return EXIT_OK


def _add(args, out):
    G = _group(args)
    xs = [_elem(e, G, args) for e in args.elem]
    z = xs[0]
    for x in xs[1:]:
        z = z + x
    out.line(_show(z))
    out.put("result", z.to_json(args.group))
    return EXIT_OK


def _restrict(args, out):
    K = _group(args)
    G = parse_group(args.source)
    alpha = parse_hom(args.hom, G, K)
    z = global_ops.restrict(alpha, _elem(args.elem, K, args))
    out.line(_show(z))
    out.put("result", z.to_json(args.source))
    return EXIT_OK


def _transfer(args, out):
    G = _group(args)
    H = parse_group(args.sub)
    incl = parse_hom(args.hom, H, G) if args.hom != "incl" else inclusion_hom(H, G)
    z = global_ops.transfer(incl, _elem(args.elem, H, args))
    out.line(_show(z))
    out.put("result", z.to_json(args.group))
    return EXIT_OK


def _deflate(args, out):
    G = _group(args)
    K = parse_group(args.to)
    f = parse_hom(args.hom, G, K)
    z = global_ops.deflate(f, _elem(args.elem, G, args))
    out.line(_show(z))
    out.put("result", z.to_json(args.to))
    return EXIT_OK


def _need_degree(args):
    if args.degree is None:
        raise UsageError("--degree is required")
    if args.degree < 0:
        raise UsageError("--degree must be non-negative")
    return args.degree


def _pow(args, out):
    G = _group(args)
    m = _need_degree(args)
    x = _elem(args.elem, G, args)
    z = global_ops.restricted_power(x, m) if args.restricted else global_ops.power(x, m)
    if G.order == 1 and not args.restricted:
        z = global_ops.power_symmetric(x, m)
    out.line(f"P^{m}({x}) in A({z.group}):")
    out.line(_show(z))
    out.put("result", z.to_json())
    return EXIT_OK


def _exps(args, out):
    G = _group(args)
    N = _need_degree(args)
    x = _elem(args.elem, G, args)
    seq = global_ops.exp_sequence(x, N)
    entries = []
    for m, z in enumerate(seq.entries):
        out.line(f"  P^{m} in A({z.group}): {z}")
        entries.append(z.to_json())
    rep = seq.check_exponential()
    out.line(rep.summary())
    out.put("entries", entries)
    out.put("exponential", rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAILED


def _theta(args, out):
    G = _group(args)
    x = parse_operator(args.op)
    a = _elem(args.elem, G, args)
    z = beta.theta(x, a)
    out.line(f"theta({x})({a}) = {_show(z)}")
    out.put("result", z.to_json(args.group))
    if a.ring.tag == "Z" and all(c >= 0 for c in a.coeffs.values()):
        closed = beta.theta_closed(x, a)
        out.line(f"orbit sets X^n/H: {_show(closed)}")
        out.put("closed_form", closed.to_json(args.group))
        if closed != z:
            out.line("the two evaluations differ")
            return EXIT_FAILED
    return EXIT_OK


def _theta2(args, out):
    G = _group(args)
    if len(args.elem) != 2:
        raise UsageError("theta2 takes exactly two --elem arguments")
    c, d = (_elem(e, G, args) for e in args.elem)
    z = parse_operator2(args.op2)
    r = beta.theta2(z, c, d)
    out.line(f"theta2({z})({c}, {d}) = {_show(r)}")
    out.put("result", r.to_json(args.group))
    return EXIT_OK


def _binary_ops(args, fn, sym, out):
    if len(args.op) != 2:
        raise UsageError("give exactly two --op arguments")
    x, y = (parse_operator(o) for o in args.op)
    z = fn(x, y)
    out.line(f"({x}) {sym} ({y}) = {z}")
    out.put("result", z.to_json())
    return EXIT_OK


def _check(args, out):
    s = args.suite
    if s in ("pairing", "power", "assoc", "transfer"):
        rep = {"pairing": global_ops.check_pairing_axioms, "power": global_ops.check_power_identities,
               "assoc": beta.check_plethysm_associativity}.get(s, _transfer_probe)()
        return _report(out, rep)
    G = _group(args)
    if s == "beta":
        return _report(out, beta.check_beta_axioms(G))
    if s == "additive":
        return _report(out, beta.check_additive_axioms(G))
    if s == "oracle":
        return _report(out, _oracle_report(G))
    if not args.source:
        raise UsageError("check morphism needs --from")
    phi = parse_hom(args.hom, parse_group(args.source), G)
    return _report(out, beta.check_morphisms(phi))


def _transfer_probe() -> Report:
    rep = Report("transfers as beta-morphisms (expected to fail somewhere)")
    hit = beta.find_transfer_counterexample()
    if hit is None:
        rep.notes.append("no counterexample in the searched range")
    else:
        rep.notes.append(f"counterexample: {hit['x']} at a = {hit['a']} in {hit['group']}")
        rep.record("transfer-not-morphism", {k: str(v) for k, v in hit.items()}, True,
                   hit["transfer_of_theta"], hit["theta_of_transfer"])
    return rep


def _oracle_report(G) -> Report:
    from .burnside import basis_elements

    rep = Report(f"double coset products against product G-sets in A({G})")
    basis = basis_elements(G)
    for i, a in enumerate(basis):
        for b in basis[i:]:
            rep.check("mul-oracle", {"a": str(a), "b": str(b)}, a * b, mul_via_sets(a, b))
    return rep


def _obstruct(args, out):
    if args.kind == "zmod":
        if args.n is None or args.n < 2:
            raise UsageError("obstruct zmod needs a modulus n >= 2")
        rep = beta.obstruction_zmodn(args.n)
    else:
        rep = beta.obstruction_gaussian()
    _report(out, rep)
    # an obstruction is a successful computation
    return EXIT_OK


def _cache(args, out):
    directory = args.cache_dir or default_dir()
    if directory is None:
        raise UsageError("no cache directory: pass --cache-dir or set BURNSIDE_CACHE")
    cache = LatticeCache(directory)
    if args.action == "list":
        for p in cache.entries():
            out.line(f"{p.name} {p.stat().st_size} bytes")
        out.put("entries", [p.name for p in cache.entries()])
        return EXIT_OK
    if args.action == "clear":
        n = cache.clear()
        out.line(f"removed {n} entries")
        out.put("removed", n)
        return EXIT_OK
    G = _group(args)
    if not has_class_table(G):
        raise BurnsideError(f"{G} is beyond the lattice bound")
    if args.action == "store":
        path = cache.store(subgroup_classes(G))
        out.line(f"stored {G} at {path}")
        out.put("path", str(path))
        return EXIT_OK
    if args.action == "load":
        tab = cache.load(G)
        hit = tab is not None
        if not hit:
            tab = subgroup_classes(G)
            cache.store(tab)
        out.line(f"{'hit' if hit else 'miss (recomputed)'}: {G}, {len(tab)} classes")
        out.put("hit", hit)
        return EXIT_OK
    tab = cache.load(G) or subgroup_classes(G)
    out.data.update(table_to_json(tab))
    out.line(json.dumps(table_to_json(tab), indent=1))
    return EXIT_OK


VERBS = {
    "marks": _marks, "classes": _classes, "mul": _mul, "add": _add, "restrict": _restrict,
    "transfer": _transfer, "deflate": _deflate, "pow": _pow, "exps": _exps, "theta": _theta,
    "theta2": _theta2,
    "plethysm": lambda a, o: _binary_ops(a, beta.plethysm, "*", o),
    "opmul": lambda a, o: _binary_ops(a, beta.transfer_product, ".", o),
    "check": _check, "obstruct": _obstruct, "cache": _cache,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.threads is not None and args.threads < 1:
        print("--threads must be positive", file=stderr)
        return EXIT_USAGE
    limits = {}
    if args.bound_lattice is not None:
        limits["lattice"] = args.bound_lattice
    if args.bound_set is not None:
        limits["set_size"] = args.bound_set
    out = Output(args.json, stdout)
    handler = logging.StreamHandler(stderr)
    log.addHandler(handler)
    try:
        with override(**limits) if limits else contextlib.nullcontext():
            code = VERBS[args.verb](args, out)
    except UsageError as exc:
        print(f"burnside {args.verb}: {exc}", file=stderr)
        return EXIT_USAGE
    except (ParseError, ValueError) as exc:
        print(f"burnside {args.verb}: {exc}", file=stderr)
        return EXIT_USAGE if isinstance(exc, ParseError) else EXIT_ERROR
    except BurnsideError as exc:
        print(f"burnside {args.verb}: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_ERROR
    finally:
        log.removeHandler(handler)
    out.close()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
