"""``quivfix`` command line.

Exit codes: 0 success, 1 usage or input error, 2 a checked identity failed.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import acceptance
from . import cohomology as coh
from . import hilbert as hb
from .automorphisms import canonical_contravariant, enumerate_aut, star_classify
from .errors import IdentityViolation, QuivfixError
from .fields import QQ, QQI, PrimeField
from .fixtures import FIXTURE_IDS, load_fixture
from .io import dumps, gauge_to_json, load_problem, parse_field, rep_to_json
from .moduli import ModuliProblem, decompose_fixed_locus, sigma_fixed_moduli
from .quiver import DoubledQuiver
from .reps import RepSpace, TwistedAction
from .symplectic import SymplecticContext

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threads() -> int:
    """QUIVFIX_THREADS is accepted as a hint; every computation here runs sequentially."""
    raw = os.environ.get("QUIVFIX_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"QUIVFIX_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("QUIVFIX_THREADS must be a positive integer")
    return n


def _load(target: str, field_spec: str | None):
    field = parse_field(field_spec) if field_spec else None
    if target in FIXTURE_IDS:
        return load_fixture(target, field)
    if not os.path.exists(target):
        raise UsageError(f"{target!r} is neither a fixture id ({', '.join(FIXTURE_IDS)}) nor a file")
    return load_problem(target, field)


def _acting(args, problem):
    if getattr(args, "subgroup_vertices", None):
        return [v.strip() for v in args.subgroup_vertices.split(",") if v.strip()]
    return problem.acting


def _require_finite(field):
    if not isinstance(field, PrimeField):
        raise UsageError("this command needs a finite field (--field Fp:<p>)")


def _moduli(problem, args):
    _require_finite(problem.field)
    if problem.extra.get("kind") == "hilbert" and not args.subgroup_vertices:
        return hb.HilbertProblem(problem.dims["0"], problem.field, args.max_points)
    space = RepSpace(problem.quiver, problem.dims, problem.field, _acting(args, problem))
    return ModuliProblem(space, problem.theta, args.max_points)


def _emit(args, obj, lines):
    if args.json:
        print(dumps(obj))
    else:
        print("\n".join(lines))


# ----- verbs ---------------------------------------------------------------------------

def cmd_aut(args) -> int:
    problem = _load(args.input, args.field)
    q = problem.quiver
    auts = enumerate_aut(q, args.variance)
    doubled = isinstance(q, DoubledQuiver)
    rows = []
    for s in auts:
        row = {"automorphism": s.to_json(), "order": s.order()}
        if doubled:
            row["star"] = star_classify(s)
        rows.append(row)
    lines = [f"{len(auts)} automorphisms ({args.variance})"]
    for s, row in zip(auts, rows):
        extra = f"  [{row['star']}]" if doubled else ""
        lines.append(f"  order {row['order']}: {s.describe()}{extra}")
    _emit(args, {"count": len(auts), "variance": args.variance, "automorphisms": rows}, lines)
    return EXIT_OK


def cmd_orbits(args) -> int:
    problem = _load(args.input, args.field)
    prob = _moduli(problem, args)
    sp = prob.space
    stable = prob.stable_orbits()
    obj = {"field": sp.field.to_json(), "orbits": len(prob.all_orbits()),
           "semistable": len(prob.semistable_orbits()), "stable": len(stable),
           "stable_representatives": [rep_to_json(sp, o.rep) for o in stable]}
    lines = [f"orbits: {obj['orbits']}  semistable: {obj['semistable']}  stable: {obj['stable']}"]
    if problem.group is not None and len(problem.group) > 1:
        fixed = sigma_fixed_moduli(prob, problem.group)
        obj["fixed_stable"] = len(fixed)
        lines.append(f"fixed stable orbits: {len(fixed)}")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    problem = _load(args.input, args.field)
    if problem.group is None or len(problem.group) < 2:
        raise UsageError("decompose needs a group with a non-identity element")
    prob = _moduli(problem, args)
    report = decompose_fixed_locus(prob, problem.group, type_classes=args.type_classes)
    obj = report.to_json()
    lines = [f"fixed regularly stable orbits: {len(report.fixed)}",
             f"components: {len(report.components)} "
             f"(non-empty {len(report.nonempty_components)})"]
    for k, comps in sorted(report.classes.items()):
        sizes = [len(c.image) for c in comps]
        lines.append(f"  type class {report.h2.labels[k]}: image sizes {sizes}")
    lines.append(f"uncovered: {len(report.uncovered) or '∅'}")
    lines.append(f"fiber law: {report.fiber_law}  disjoint: {report.disjoint}")
    if report.caveat:
        lines.append(f"caveat: {report.caveat}")
    _emit(args, obj, lines)
    return EXIT_OK if report.fiber_law and report.disjoint else EXIT_MISMATCH


def _cohomology_trivial(args) -> int:
    field = parse_field(args.field or "Fp:3")
    _require_finite(field)
    if args.group != "Z2":
        raise UsageError("only --group Z2 is supported without an input file")
    kind, _, n = args.coefficients.partition(":")
    if kind != "GL" or not n.isdigit() or int(n) < 1:
        raise UsageError("--coefficients must look like GL:<n>")
    n = int(n)
    res = hb.involution_classes(n, field)
    obj = {"group": "Z2", "coefficients": f"GL:{n}", "action": "trivial", "field": field.to_json(),
           "classes": res["class_count"], "class_sizes": res["class_sizes"],
           "representatives": [[[field.format(x) for x in row] for row in u]
                               for u in res["representatives"]],
           "matches_diagonal": res["matches_diagonal"]}
    lines = [f"H^1(Z/2, GL_{n}(F_{field.p})) with trivial action: {res['class_count']} classes",
             f"class sizes: {res['class_sizes']}"]
    _emit(args, obj, lines)
    return EXIT_OK if res["matches_diagonal"] else EXIT_MISMATCH


def cmd_cohomology(args) -> int:
    if not args.input:
        return _cohomology_trivial(args)
    problem = _load(args.input, args.field)
    _require_finite(problem.field)
    if problem.group is None:
        raise UsageError("input has no group")
    space = RepSpace(problem.quiver, problem.dims, problem.field, _acting(args, problem))
    G = problem.group
    action = TwistedAction(space, G)
    h1d = coh.delta_h1(action)
    h1g = coh.TwistedH1(action)
    kernel = coh.kernel_to_G(action, h1g, h1d)
    h2 = coh.h2_delta(G, space.field, space.delta_scalars())
    families = coh.enumerate_modifying_families(space, G)
    obj = {"group_order": len(G), "h1_delta": len(h1d), "h1_G": len(h1g), "kernel": len(kernel),
           "h2_delta": list(h2.labels), "modifying_families": len(families),
           "h1_G_representatives": [[gauge_to_json(space, g) for g in b] for b in h1g.representatives]}
    lines = [f"|S| = {len(G)}", f"H^1(S, Delta): {len(h1d)} classes",
             f"H^1(S, G): {len(h1g)} classes", f"kernel of H^1(S, Delta) -> H^1(S, G): {len(kernel)}",
             f"H^2(S, Delta): {len(h2)} classes {list(h2.labels)}",
             f"modifying families: {len(families)}"]
    _emit(args, obj, lines)
    return EXIT_OK


def _brane_automorphisms(args, problem):
    qd = problem.quiver
    if args.auto == "canonical-star":
        return [canonical_contravariant(qd)]
    if args.auto == "identity":
        return [None]
    if args.auto == "all":
        return [s for s in enumerate_aut(qd) if star_classify(s) != "not_star" and s.order() <= 2]
    if args.auto == "group":
        if problem.group is None:
            raise UsageError("input has no group")
        return [problem.group[i] for i in problem.group.non_identity()] or [None]
    raise UsageError(f"unknown --auto {args.auto!r}")


def cmd_brane(args) -> int:
    problem = _load(args.input, args.field)
    if not isinstance(problem.quiver, DoubledQuiver):
        raise UsageError("brane needs a doubled quiver (with a star pairing)")
    if problem.field not in (QQ, QQI):
        raise UsageError("brane works over Q or Qi")
    ctx = SymplecticContext(problem.quiver, problem.dims, problem.field)
    certs, lines = [], []
    for s in _brane_automorphisms(args, problem):
        if problem.field is QQ:
            if args.conjugate:
                raise UsageError("--conjugate needs --field Qi")
            sign = 1 if s is None else ctx.pullback_omega_sign(s)
            label = "identity" if s is None else s.describe()
            certs.append({"sigma": None if s is None else s.to_json(), "omega": sign})
            lines.append(f"{label}: pullback of omega = {sign:+d} omega")
            continue
        cert = ctx.brane_type(s, args.conjugate)
        certs.append(cert.to_json())
        label = "identity" if s is None else s.describe()
        tau = " with tau" if args.conjugate else ""
        lines.append(f"{label}{tau}: {cert.type}  signs I{_s(cert, 'I')} J{_s(cert, 'J')} K{_s(cert, 'K')}")
    _emit(args, certs[0] if len(certs) == 1 else certs, lines)
    return EXIT_OK


def _s(cert, name):
    return "+" if cert.signs[name] == 1 else "-"


def cmd_verify(args) -> int:
    if args.target in (None, "all"):
        try:
            results = acceptance.run_all(args.filter)
        except KeyError:
            raise UsageError(f"unknown suite {args.filter!r}; known: "
                             f"{', '.join(acceptance.SUITES)}") from None
    else:
        if args.filter:
            raise UsageError("--filter applies to the full acceptance run only")
        results = [acceptance.verify_problem(_load(args.target, args.field), args.max_points)]
    ok = all(r.passed for r in results)
    if args.json:
        rows = [r.to_json() for r in results]
        if not args.timings:
            for row in rows:
                row.pop("seconds")
        print(dumps({"passed": ok, "results": rows}))
    else:
        for r in results:
            print(r.line())
            if args.target not in (None, "all"):
                for k, v in r.checks.items():
                    print(f"  {'ok  ' if v else 'FAIL'} {k}")
                _print_details(r.details)
        print("all passed" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_MISMATCH


def _print_details(details):
    dec = details.get("decomposition")
    if dec:
        print(f"  components: {dec['component_count']}  uncovered: {len(dec['uncovered']) or '∅'}")
        if dec["caveat"]:
            print(f"  caveat: {dec['caveat']}")
    for key in ("stable", "fixed", "component_sizes", "h1_delta", "h1_G", "kernel", "census"):
        if key in details:
            value = details[key]
            if key == "census":
                value = {k: value[k] for k in ("candidates", "computed", "nonempty", "uncovered")}
            print(f"  {key}: {value}")
    for name, t in sorted(details.get("brane_types", {}).items()):
        print(f"  {name}: {t}")


# ----- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quivfix", description="Fixed loci of quiver automorphisms over exact fields.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", help="fixture id or path to a problem JSON file")
        sp.add_argument("--field", help="Fp:<p>, Q or Qi (overrides the input)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--max-points", type=int, default=10 ** 6)
        sp.add_argument("--subgroup-vertices", help="comma-separated vertices where the gauge group acts")

    a = sub.add_parser("aut", help="enumerate quiver automorphisms")
    common(a)
    a.add_argument("--variance", choices=["all", "covariant", "contravariant"], default="all")
    a.set_defaults(func=cmd_aut)

    o = sub.add_parser("orbits", help="stable orbits over F_p")
    common(o)
    o.set_defaults(func=cmd_orbits)

    d = sub.add_parser("decompose", help="decompose the fixed stable locus")
    common(d)
    d.add_argument("--type-classes", choices=["closed", "field"], default="closed")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("cohomology", help="H^1 and H^2 of the group with gauge coefficients")
    common(c, needs_input=False)
    c.add_argument("input", nargs="?", help="fixture id or problem JSON (omit for --group/--coefficients)")
    c.add_argument("--group", default="Z2")
    c.add_argument("--coefficients", default="GL:1")
    c.set_defaults(func=cmd_cohomology)

    b = sub.add_parser("brane", help="brane type of a fixed locus")
    common(b)
    b.add_argument("--auto", default="group", help="canonical-star, identity, group or all")
    b.add_argument("--conjugate", action="store_true", help="compose with entrywise conjugation")
    b.set_defaults(func=cmd_brane)

    v = sub.add_parser("verify", help="run acceptance checks or verify one input")
    common(v, needs_input=False)
    v.add_argument("target", nargs="?", help="'all' (default), a fixture id or a problem JSON file")
    v.add_argument("--filter", help=f"one suite: {', '.join(acceptance.SUITES)}")
    v.add_argument("--timings", action="store_true", help="include runtimes in --json output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()
        return args.func(args)
    except UsageError as exc:
        print(f"quivfix: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IdentityViolation as exc:
        print(f"quivfix: identity failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (QuivfixError, ValueError, KeyError, OSError) as exc:
        print(f"quivfix: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
