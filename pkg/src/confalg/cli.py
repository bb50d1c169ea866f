"""Command-line interface.

    confalg verify-conformal FILE --kind {leibniz,lie,left-leibniz}
    confalg check-structure FILE --which {t,anl,symmetrized,star-zero,
                                          circ-zero,gd,novikov,
                                          assoc-novikov,averaging}
    confalg classify-brackets FILE
    confalg central-ext FILE --case {anl,assoc-novikov,gd,novikov-lie}
                        [--degree N]
    confalg coeff FILE [--grid LO..HI] [--verify]
                  [--phi from-central-ext --case CASE]
    confalg examples

FILE is a path to an algebra definition, or the name of one of the bundled
corpus files (e.g. rab.alg).  --at a=2,b=-1/3 substitutes rational values
for declared parameters.  --format machine prints JSON instead of text.
Exit status: 0 all checks passed, 1 a mathematical check failed, 2 usage or
parse error.
"""

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from .dsl import parse, DslError
from .scalars import ScalarError
from .superspace import (check_leibniz_superalgebra,
                         check_left_leibniz_superalgebra,
                         check_lie_superalgebra)
from .conformal import (check_conformal_sesquilinearity, check_conformal_skew,
                        check_conformal_leibniz, check_conformal_jacobi)
from .quadratic import (build_quadratic_bracket, zero_map, star_from_mode,
                        StarMode, check_structure_equations_t, check_anl,
                        check_symmetrized_case, check_star_trivial_case,
                        check_circ_trivial_case, check_gd_bialgebra,
                        check_novikov, check_associative_novikov,
                        check_averaging, build_assoc_novikov_from_averaging,
                        classify_brackets)
from .extensions import (PreconditionError, solve_cocycles_direct,
                         solve_central_ext_anl,
                         solve_central_ext_assoc_novikov,
                         solve_leibniz_central_ext_gd)
from .coeff import CoeffAlgebra, build_phi_cocycles, check_phi_cocycle


class UsageError(Exception):
    pass


class CheckFailure(Exception):
    pass


# ---------- input handling ----------

def _load(path_or_name):
    try:
        with open(path_or_name) as fh:
            text = fh.read()
    except OSError:
        base = resources.files("confalg") / "corpus"
        text = None
        for name in (path_or_name, path_or_name + ".alg"):
            try:
                text = (base / name).read_text()
                break
            except (OSError, FileNotFoundError):
                continue
        if text is None:
            raise UsageError("cannot read %r (not a file, not a bundled "
                             "example)" % path_or_name)
    try:
        return parse(text)
    except DslError as exc:
        raise UsageError("%s: %s" % (path_or_name, exc))


def _parse_at(at):
    if not at:
        return {}
    assignments = {}
    for piece in at.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise UsageError("--at expects name=value pairs, got %r" % piece)
        name, _, value = piece.partition("=")
        try:
            assignments[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError("--at value %r is not a rational" % value)
    return assignments


def _algebra(args):
    af = _load(args.file)
    assignments = _parse_at(getattr(args, "at", None))
    if assignments:
        try:
            af = af.substitute(assignments)
        except DslError as exc:
            raise UsageError(str(exc))
    return af


def _require_no_params(af, command):
    if af.params:
        raise UsageError(
            "%s needs rational structure constants, but %r still has "
            "parameters %s; substitute them with --at"
            % (command, af.name, ", ".join(af.params)))


# ---------- output handling ----------

class Output:
    """Collects text lines and a machine-readable mirror of the results."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.data = {}

    def text(self, line=""):
        self.lines.append(line)

    def report(self, rep):
        self.text(str(rep))
        self.data.setdefault("reports", []).append({
            "name": rep.name,
            "passed": rep.passed,
            "checked": rep.checked,
            "failures": [{"identity": f["identity"],
                          "at": list(f["at"]),
                          "residual": f["residual"]}
                         for f in rep.failures],
        })

    def flush(self, command, passed):
        if self.fmt == "machine":
            payload = {"command": command, "passed": passed}
            payload.update(self.data)
            print(json.dumps(payload, indent=2))
        else:
            for line in self.lines:
                print(line)


def _frac_str(x):
    return str(Fraction(x))


def _solution_payload(sol):
    return {
        "route": sol.route,
        "degrees": list(sol.degrees),
        "dimension": sol.dimension,
        "unknowns": [list(u) for u in sol.unknowns],
        "basis": [[_frac_str(x) for x in vec] for vec in sol.basis],
        "warnings": list(sol.warnings),
    }


# ---------- component resolution ----------

def _resolved_star(af, required=False):
    star = af.star()
    if star is None:
        if required:
            raise UsageError("algebra %r declares no star directive"
                             % af.name)
        star = zero_map(af.space, "star")
    return star


def _first_linear_map(af):
    for lm in af.linear_maps.values():
        return lm
    raise UsageError("algebra %r declares no linear-map" % af.name)


def _averaging_product(af):
    if "prod" in af.ops:
        return af.ops["prod"]
    raise UsageError("the averaging check needs an op named 'prod'")


# ---------- commands ----------

def cmd_verify_conformal(args, out):
    af = _algebra(args)
    bracket = af.conformal_bracket()
    out.data["algebra"] = af.name
    out.text("algebra %s: bracket entries" % af.name)
    for line in bracket.entries_str():
        out.text("  " + line)
    reports = [check_conformal_sesquilinearity(bracket,
                                               fail_fast=args.fail_fast)]
    if args.kind == "leibniz":
        reports.append(check_conformal_leibniz(bracket,
                                               fail_fast=args.fail_fast))
    elif args.kind == "lie":
        reports.append(check_conformal_skew(bracket,
                                            fail_fast=args.fail_fast))
        reports.append(check_conformal_jacobi(bracket,
                                              fail_fast=args.fail_fast))
    else:  # left-leibniz
        reports.append(check_conformal_jacobi(bracket,
                                              fail_fast=args.fail_fast))
    ok = True
    for rep in reports:
        out.report(rep)
        ok = ok and rep.passed
    return ok


_STRUCTURE_WHICH = ("t", "anl", "symmetrized", "star-zero", "circ-zero",
                    "gd", "novikov", "assoc-novikov", "averaging")


def _run_structure(af, which, fail_fast=False):
    circ = af.circ()
    bracket = af.classical_bracket()
    if which == "t":
        return check_structure_equations_t(circ, _resolved_star(af), bracket,
                                           fail_fast=fail_fast)
    if which == "anl":
        return check_anl(circ, bracket, fail_fast=fail_fast)
    if which == "symmetrized":
        return check_symmetrized_case(circ, bracket, fail_fast=fail_fast)
    if which == "star-zero":
        return check_star_trivial_case(circ, bracket, fail_fast=fail_fast)
    if which == "circ-zero":
        return check_circ_trivial_case(_resolved_star(af, required=True),
                                       bracket, fail_fast=fail_fast)
    if which == "gd":
        return check_gd_bialgebra(circ, bracket, fail_fast=fail_fast)
    if which == "novikov":
        return check_novikov(circ, fail_fast=fail_fast)
    if which == "assoc-novikov":
        return check_associative_novikov(circ, fail_fast=fail_fast)
    if which == "averaging":
        return check_averaging(_averaging_product(af), _first_linear_map(af),
                               fail_fast=fail_fast)
    raise UsageError("unknown structure system %r" % which)


def cmd_check_structure(args, out):
    af = _algebra(args)
    out.data["algebra"] = af.name
    rep = _run_structure(af, args.which, fail_fast=args.fail_fast)
    out.report(rep)
    return rep.passed


def cmd_classify_brackets(args, out):
    af = _algebra(args)
    _require_no_params(af, "classify-brackets")
    out.data["algebra"] = af.name
    result = classify_brackets(af.circ())
    out.text(str(result))
    out.report(result.preconditions)
    out.data["dimension"] = result.dimension
    out.data["family"] = result.family.entries_str()
    out.data["constraints"] = list(result.constraints)
    return not result.constraints


_EXT_CASES = ("anl", "assoc-novikov", "gd", "novikov-lie")


def _case_components(af, case):
    """(structured solve callable, conformal bracket) for a case."""
    circ = af.circ()
    bracket = af.classical_bracket()
    space = af.space
    if case == "anl":
        conf = build_quadratic_bracket(circ,
                                       star_from_mode(circ, StarMode.DOUBLE),
                                       bracket)
        return (lambda: solve_central_ext_anl(circ, bracket)), conf
    if case == "assoc-novikov":
        conf = build_quadratic_bracket(circ,
                                       star_from_mode(circ, StarMode.DOUBLE),
                                       zero_map(space))
        return (lambda: solve_central_ext_assoc_novikov(circ)), conf
    if case == "gd":
        conf = build_quadratic_bracket(
            circ, star_from_mode(circ, StarMode.SYMMETRIZED), bracket)
        return (lambda: solve_leibniz_central_ext_gd(circ, bracket,
                                                     case="gd")), conf
    if case == "novikov-lie":
        conf = build_quadratic_bracket(
            circ, star_from_mode(circ, StarMode.SYMMETRIZED), zero_map(space))
        return (lambda: solve_leibniz_central_ext_gd(
            circ, case="novikov-lie")), conf
    raise UsageError("unknown central-extension case %r" % case)


def cmd_central_ext(args, out):
    af = _algebra(args)
    _require_no_params(af, "central-ext")
    out.data["algebra"] = af.name
    solve, conf = _case_components(af, args.case)
    try:
        structured = solve()
    except PreconditionError as exc:
        out.text("preconditions for case %r FAILED:" % args.case)
        out.report(exc.report)
        out.data["preconditions_passed"] = False
        return False
    direct = solve_cocycles_direct(conf, range(args.degree + 1))
    degrees = sorted(set(structured.degrees) | set(direct.degrees))
    agree = (structured.embed(degrees).reduced_basis()
             == direct.embed(degrees).reduced_basis())
    out.text(str(structured))
    out.text(str(direct))
    out.text("routes %s on the common degree range %s"
             % ("AGREE" if agree else "DISAGREE", degrees))
    out.data["structured"] = _solution_payload(structured)
    out.data["direct"] = _solution_payload(direct)
    out.data["agree"] = agree
    return agree


def _parse_grid(grid):
    lo, sep, hi = grid.partition("..")
    if not sep:
        raise UsageError("--grid expects LO..HI, got %r" % grid)
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError("--grid bounds must be integers")
    if lo > hi:
        raise UsageError("--grid range is empty")
    return range(lo, hi + 1)


def cmd_coeff(args, out):
    af = _algebra(args)
    _require_no_params(af, "coeff")
    out.data["algebra"] = af.name
    bracket = af.conformal_bracket()
    coeff = CoeffAlgebra(bracket)
    grid = _parse_grid(args.grid)
    table = coeff.table_lines(grid)
    out.text("coefficient algebra of %s on modes %d..%d:"
             % (af.name, grid[0], grid[-1]))
    for line in table:
        out.text("  " + line)
    out.data["table"] = table
    ok = True
    if args.verify:
        rep = coeff.check_leibniz(grid, fail_fast=args.fail_fast)
        out.report(rep)
        ok = ok and rep.passed
    if args.phi:
        if args.case is None:
            raise UsageError("--phi from-central-ext needs --case")
        solve, conf = _case_components(af, args.case)
        try:
            solution = solve()
        except PreconditionError as exc:
            out.text("preconditions for case %r FAILED:" % args.case)
            out.report(exc.report)
            return False
        phis = build_phi_cocycles(solution)
        out.data["phi_count"] = len(phis)
        for n, phi in enumerate(phis):
            out.text("phi[%d]: %s" % (n, phi))
            rep = check_phi_cocycle(coeff, phi, grid,
                                    fail_fast=args.fail_fast)
            out.report(rep)
            ok = ok and rep.passed
    return ok


# ---------- the examples command ----------

def _check_runner(name):
    def conformal(fn):
        return lambda af: fn(af.conformal_bracket()).passed

    def classical(fn):
        return lambda af: fn(af.classical_bracket()).passed

    runners = {
        "conformal-leibniz": conformal(check_conformal_leibniz),
        "conformal-skew": conformal(check_conformal_skew),
        "conformal-jacobi": conformal(check_conformal_jacobi),
        "conformal-lie": lambda af: (
            check_conformal_skew(af.conformal_bracket()).passed
            and check_conformal_jacobi(af.conformal_bracket()).passed),
        "classical-right-leibniz": classical(check_leibniz_superalgebra),
        "classical-left-leibniz": classical(check_left_leibniz_superalgebra),
        "classical-lie": classical(check_lie_superalgebra),
        "derived-circ-assoc-novikov": lambda af: check_associative_novikov(
            build_assoc_novikov_from_averaging(
                _averaging_product(af), _first_linear_map(af))).passed,
    }
    if name in runners:
        return runners[name]
    if name in _STRUCTURE_WHICH:
        return lambda af: _run_structure(af, name).passed
    raise UsageError("unknown check %r" % name)


# (file, check, expected outcome) for every bundled corpus algebra
EXAMPLE_EXPECTATIONS = [
    ("rab.alg", "t", True),
    ("rab.alg", "anl", True),
    ("rab.alg", "conformal-leibniz", True),
    ("rab.alg", "conformal-skew", False),
    ("rab.alg", "classical-right-leibniz", False),
    ("rab.alg", "classical-left-leibniz", True),
    ("r00.alg", "anl", True),
    ("r00.alg", "conformal-leibniz", True),
    ("r00.alg", "conformal-skew", False),
    ("gd_final.alg", "novikov", True),
    ("gd_final.alg", "gd", True),
    ("gd_final.alg", "symmetrized", True),
    ("gd_final.alg", "conformal-lie", True),
    ("virasoro.alg", "conformal-lie", True),
    ("fpoly.alg", "conformal-lie", True),
    ("fpoly_nonlie.alg", "conformal-leibniz", True),
    ("fpoly_nonlie.alg", "conformal-skew", False),
    ("cur_leib.alg", "classical-right-leibniz", True),
    ("cur_leib.alg", "conformal-leibniz", True),
    ("cur_leib.alg", "conformal-skew", False),
    ("cur_lie.alg", "classical-lie", True),
    ("cur_lie.alg", "conformal-lie", True),
    ("star0_sq.alg", "star-zero", True),
    ("star0_sq.alg", "conformal-leibniz", True),
    ("circ0_sq.alg", "circ-zero", True),
    ("circ0_sq.alg", "conformal-leibniz", True),
    ("circ0_sq.alg", "conformal-skew", False),
    ("avg_x3.alg", "averaging", True),
    ("avg_x3.alg", "derived-circ-assoc-novikov", True),
]


def cmd_examples(args, out):
    cache = {}
    rows = []
    all_ok = True
    for fname, check, expected in EXAMPLE_EXPECTATIONS:
        if fname not in cache:
            cache[fname] = _load(fname)
        got = _check_runner(check)(cache[fname])
        ok = (got == expected)
        all_ok = all_ok and ok
        rows.append({"file": fname, "check": check,
                     "expected": expected, "got": got, "ok": ok})
        out.text("%-4s %-18s %-28s expected %-5s got %s"
                 % ("ok" if ok else "BAD", fname, check, expected, got))
    out.data["results"] = rows
    return all_ok


# ---------- argument parsing ----------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="confalg",
        description="Exact checks and constructions for conformal "
                    "superalgebras given by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="algebra definition file (or the "
                                        "name of a bundled example)")
            p.add_argument("--at", default=None,
                           help="substitute parameters, e.g. a=2,b=-1/3")
        p.add_argument("--format", choices=("text", "machine"),
                       default="text")
        p.add_argument("--fail-fast", action="store_true")

    p = sub.add_parser("verify-conformal",
                       help="check the conformal axioms of the bracket")
    common(p)
    p.add_argument("--kind", choices=("leibniz", "lie", "left-leibniz"),
                   default="leibniz")
    p.set_defaults(fn=cmd_verify_conformal)

    p = sub.add_parser("check-structure",
                       help="check one of the finite structure-equation "
                            "systems")
    common(p)
    p.add_argument("--which", choices=_STRUCTURE_WHICH, required=True)
    p.set_defaults(fn=cmd_check_structure)

    p = sub.add_parser("classify-brackets",
                       help="classify the brackets compatible with circ")
    common(p)
    p.set_defaults(fn=cmd_classify_brackets)

    p = sub.add_parser("central-ext",
                       help="solve the central-extension cocycle system by "
                            "both routes and compare")
    common(p)
    p.add_argument("--case", choices=_EXT_CASES, required=True)
    p.add_argument("--degree", type=int, default=3,
                   help="ansatz degree for the direct route (default 3)")
    p.set_defaults(fn=cmd_central_ext)

    p = sub.add_parser("coeff",
                       help="build (and optionally verify) the coefficient "
                            "superalgebra on a mode window")
    common(p)
    p.add_argument("--grid", default="-3..3", help="mode window LO..HI")
    p.add_argument("--verify", action="store_true",
                   help="check the Leibniz identity on the window")
    p.add_argument("--phi", choices=("from-central-ext",), default=None,
                   help="also check the mode cocycles of the central-"
                        "extension solutions")
    p.add_argument("--case", choices=_EXT_CASES, default=None)
    p.set_defaults(fn=cmd_coeff)

    p = sub.add_parser("examples",
                       help="run the bundled corpus against its expected "
                            "outcomes")
    common(p, needs_file=False)
    p.set_defaults(fn=cmd_examples)

    return parser


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    # glue values that begin with '-' (e.g. --grid -2..2) onto their option
    glued = []
    skip = False
    for n, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if (arg in ("--grid", "--at") and n + 1 < len(argv)
                and argv[n + 1].startswith("-")):
            glued.append("%s=%s" % (arg, argv[n + 1]))
            skip = True
        else:
            glued.append(arg)
    parser = _build_parser()
    args = parser.parse_args(glued)
    out = Output(args.format)
    try:
        passed = args.fn(args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ScalarError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    out.flush(args.command, passed)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
