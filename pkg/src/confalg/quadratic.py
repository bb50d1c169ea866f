"""Quadratic conformal brackets built from a pair of products and a bracket.

The dictionary: given products circ, star and a bracket on a SuperSpace V,
the quadratic conformal bracket on Q[d] (x) V is

    [x _l y] = d (y circ x) + l (y star x) + [y, x]

(note the argument swap).  This module holds the finite systems of structure
equations that characterize when that bracket satisfies the conformal
Leibniz identity, for the general case and for the special shapes of star
(star = 2 circ, star symmetrized from circ, star = 0, circ = 0), plus the
Novikov / associative-Novikov / Gelfand-Dorfman style product axioms, the
averaging-operator construction, and an exact classifier for the brackets
compatible with a fixed circ.

Structure equations are stored as data: each equation is a list of terms
(coefficient, sign pairs, expression tree), where a sign pair (A, B) of slot
strings contributes (-1)^{parity(A) parity(B)} for the parities of the basis
triple substituted into slots x, y, z.  One evaluator runs every system.
"""

from fractions import Fraction

from . import linalg
from .scalars import Scalar
from .superspace import (AxiomReport, GradedBilinearMap, SuperSpace, sign,
                         check_associative, check_left_leibniz_superalgebra,
                         check_lie_superalgebra, check_supercommutative)
from .conformal import LambdaBracket, VPoly


# ---------- expression trees ----------

X = ('slot', 'x')
Y = ('slot', 'y')
Z = ('slot', 'z')


def C(u, v):
    return ('op', 'circ', u, v)


def S(u, v):
    return ('op', 'star', u, v)


def B(u, v):
    return ('op', 'bracket', u, v)


def _term_sign(sign_pairs, parities):
    expo = 0
    for left, right in sign_pairs:
        pl = sum(parities[ch] for ch in left)
        pr = sum(parities[ch] for ch in right)
        expo += pl * pr
    return -1 if expo % 2 else 1


def _eval_expr(expr, ops, vecs):
    if expr[0] == 'slot':
        return vecs[expr[1]]
    _, opname, left, right = expr
    return ops[opname](_eval_expr(left, ops, vecs), _eval_expr(right, ops, vecs))


def equation_residual(terms, ops, space, triple):
    """The residual vector of one structure equation at a basis triple."""
    i, j, k = triple
    vecs = {'x': space.basis_vec(i), 'y': space.basis_vec(j),
            'z': space.basis_vec(k)}
    parities = {'x': space.parity(i), 'y': space.parity(j),
                'z': space.parity(k)}
    total = space.zero_vec()
    for coeff, sign_pairs, expr in terms:
        s = coeff * _term_sign(sign_pairs, parities)
        total = space.add(total, space.scale(s, _eval_expr(expr, ops, vecs)))
    return total


def check_system(title, equations, ops, fail_fast=False, report=None):
    """Check every equation of a system on every basis triple."""
    space = next(iter(ops.values())).space
    rep = report or AxiomReport(title)
    for name, terms in equations:
        for i in range(space.dim):
            for j in range(space.dim):
                for k in range(space.dim):
                    rep.checked += 1
                    res = equation_residual(terms, ops, space, (i, j, k))
                    if not space.vec_is_zero(res):
                        rep.record(name, (space.names[i], space.names[j],
                                          space.names[k]),
                                   space.vec_str(res))
                        if fail_fast:
                            return rep
    return rep


# ---------- the equation systems ----------

LEFT_LEIBNIZ_EQ = ('bracket left Leibniz',
                   [(1, (), B(X, B(Y, Z))),
                    (-1, (), B(B(X, Y), Z)),
                    (-1, (('x', 'y'),), B(Y, B(X, Z)))])

T_SYSTEM = [
    ('quad1', [(1, (), C(C(X, Y), Z)),
            (1, (), S(C(X, Y), Z)),
            (1, (), C(X, C(Y, Z))),
            (-1, (), C(X, S(Y, Z))),
            (1, (('x', 'y'),), C(Y, S(X, Z))),
            (-1, (('x', 'y'),), S(Y, S(X, Z)))]),
    ('quad2', [(1, (), C(C(X, Y), Z)),
            (1, (('x', 'y'),), C(Y, C(X, Z))),
            (-1, (('x', 'y'),), S(Y, C(X, Z)))]),
    ('quad3', [(1, (), C(S(X, Y), Z)),
            (1, (), C(X, C(Y, Z))),
            (1, (('x', 'y'),), C(Y, C(X, Z))),
            (-2, (('x', 'y'),), S(Y, C(X, Z)))]),
    ('quad4', [(1, (), S(C(X, Y), Z)),
            (1, (), S(X, C(Y, Z))),
            (-1, (), S(X, S(Y, Z)))]),
    ('quad5', [(1, (), S(S(X, Y), Z)),
            (2, (), S(X, C(Y, Z))),
            (-1, (), S(X, S(Y, Z))),
            (-1, (('x', 'y'),), S(Y, S(X, Z)))]),
    ('quad6', [(-1, (), S(X, C(Y, Z))),
            (1, (('x', 'y'),), S(Y, C(X, Z)))]),
    ('quad7', [(1, (), S(B(X, Y), Z)),
            (1, (), B(C(X, Y), Z)),
            (1, (), B(X, C(Y, Z))),
            (-1, (), B(X, S(Y, Z))),
            (-1, (), S(X, B(Y, Z))),
            (1, (('x', 'y'),), B(Y, S(X, Z)))]),
    ('quad8', [(1, (), C(B(X, Y), Z)),
            (1, (), B(C(X, Y), Z)),
            (-1, (), C(X, B(Y, Z))),
            (1, (('x', 'y'),), B(Y, C(X, Z))),
            (1, (('x', 'y'),), C(Y, B(X, Z))),
            (-1, (('x', 'y'),), S(Y, B(X, Z)))]),
    ('quad9', [(1, (), B(S(X, Y), Z)),
            (1, (), B(X, C(Y, Z))),
            (-1, (), S(X, B(Y, Z))),
            (1, (('x', 'y'),), B(Y, C(X, Z))),
            (-1, (('x', 'y'),), S(Y, B(X, Z)))]),
    LEFT_LEIBNIZ_EQ,
]

R_PRODUCT_EQS = [
    ('circ-assoc', [(1, (), C(C(X, Y), Z)),
            (-1, (), C(X, C(Y, Z)))]),
    ('circ-left-sym', [(1, (), C(X, C(Y, Z))),
            (-1, (('x', 'y'),), C(Y, C(X, Z)))]),
]

R_MIXED_EQS = [
    ('mixed1', [(2, (), C(X, B(Y, Z))),
            (-1, (), B(C(X, Y), Z)),
            (-1, (('x', 'y'),), B(Y, C(X, Z)))]),
    ('mixed2', [(2, (), C(B(X, Y), Z)),
            (-1, (), B(X, C(Y, Z))),
            (1, (('x', 'y'),), B(Y, C(X, Z)))]),
    ('mixed3', [(1, (), C(B(X, Y), Z)),
            (1, (), C(X, B(Y, Z))),
            (-1, (('x', 'y'),), C(Y, B(X, Z)))]),
]

NOVIKOV_SYSTEM = [
    ('nov1', [(1, (), C(C(X, Y), Z)),
              (-1, (('y', 'z'),), C(C(X, Z), Y))]),
    ('nov2', [(1, (), C(C(X, Y), Z)),
              (-1, (), C(X, C(Y, Z))),
              (-1, (('x', 'y'),), C(C(Y, X), Z)),
              (1, (('x', 'y'),), C(Y, C(X, Z)))]),
]

K_SYSTEM = [
    ('sym1', [(1, (), C(B(X, Y), Z)),
            (1, (), B(C(X, Y), Z)),
            (-1, (), C(X, B(Y, Z))),
            (1, (('x', 'y'),), B(Y, C(X, Z))),
            (-1, (('y', 'z'),), C(B(X, Z), Y))]),
    ('sym2', [(1, (), C(B(X, Y), Z)),
            (1, (('x', 'y'),), C(B(Y, X), Z))]),
    ('sym3', [(1, (), B(C(X, Y), Z)),
            (1, (('z', 'xy'),), B(Z, C(X, Y)))]),
]

STAR_TRIVIAL_SYSTEM = [
    ('sz1a', [(1, (), C(C(X, Y), Z))]),
    ('sz1b', [(1, (), C(X, C(Y, Z)))]),
    ('sz2a', [(1, (), B(C(X, Y), Z)),
             (1, (), B(X, C(Y, Z)))]),
    ('sz2b', [(1, (), B(X, C(Y, Z))),
             (1, (('x', 'y'),), B(Y, C(X, Z)))]),
    ('sz3', [(1, (), C(B(X, Y), Z)),
            (1, (), B(C(X, Y), Z)),
            (-1, (), C(X, B(Y, Z))),
            (1, (('x', 'y'),), B(Y, C(X, Z))),
            (1, (('x', 'y'),), C(Y, B(X, Z)))]),
    LEFT_LEIBNIZ_EQ,
]

CIRC_TRIVIAL_SYSTEM = [
    ('cz1a', [(1, (), S(S(X, Y), Z))]),
    ('cz1b', [(1, (), S(X, S(Y, Z)))]),
    ('cz2a', [(1, (), S(X, B(Y, Z)))]),
    ('cz2b', [(1, (), B(S(X, Y), Z))]),
    ('cz3', [(1, (), S(B(X, Y), Z)),
            (-1, (), B(X, S(Y, Z))),
            (1, (('x', 'y'),), B(Y, S(X, Z)))]),
    LEFT_LEIBNIZ_EQ,
]

PRODUCT_BRACKET_COMPAT_EQ = (
    'product-bracket compatibility',
    [(1, (), B(C(X, Y), Z)),
     (1, (), C(B(X, Y), Z)),
     (-1, (), C(X, B(Y, Z))),
     (-1, (('y', 'z'),), B(C(X, Z), Y)),
     (-1, (('y', 'z'),), C(B(X, Z), Y))])


# ---------- star construction ----------

class StarMode:
    DOUBLE = 'double-circ'
    SYMMETRIZED = 'symmetrized'
    ZERO = 'zero'
    EXPLICIT = 'explicit'


def zero_map(space, name=None):
    return GradedBilinearMap(space, name=name)


def star_from_mode(circ, mode):
    """Build the star product from circ for the three derived modes."""
    space = circ.space
    out = GradedBilinearMap(space, name='star')
    if mode == StarMode.ZERO:
        return out
    if mode == StarMode.DOUBLE:
        for (i, j), vec in circ.table.items():
            out.set_entry(i, j, space.scale(2, vec))
        return out
    if mode == StarMode.SYMMETRIZED:
        for i in range(space.dim):
            for j in range(space.dim):
                vec = space.add(circ(i, j),
                                space.scale(sign(space.parity(i),
                                                 space.parity(j)),
                                            circ(j, i)))
                if not space.vec_is_zero(vec):
                    out.set_entry(i, j, vec)
        return out
    raise ValueError("unknown star mode %r" % (mode,))


class QuadraticData:
    """The (circ, star, bracket) triple feeding the quadratic dictionary.

    Any component may be None (meaning zero).  All non-None components must
    share one SuperSpace.
    """

    def __init__(self, space, circ=None, star=None, bracket=None):
        self.space = space
        self.circ = circ if circ is not None else zero_map(space, 'circ')
        self.star = star if star is not None else zero_map(space, 'star')
        self.bracket = bracket if bracket is not None else zero_map(space, 'bracket')
        for comp in (self.circ, self.star, self.bracket):
            assert comp.space is space, "components live on different spaces"


def build_quadratic_bracket(circ, star, bracket):
    """[e_i _l e_j] = d (e_j circ e_i) + l (e_j star e_i) + [e_j, e_i]."""
    space = circ.space
    assert star.space is space and bracket.space is space
    out = LambdaBracket(space, name='quadratic')
    for i in range(space.dim):
        for j in range(space.dim):
            vp = (VPoly.vector(space, circ(j, i)).times_monomial(dd=1)
                  + VPoly.vector(space, star(j, i)).times_monomial(dl=1)
                  + VPoly.vector(space, bracket(j, i)))
            if not vp.is_zero():
                out.set_entry(i, j, vp)
    return out


# ---------- the named checks ----------

def check_structure_equations_t(circ, star, bracket, fail_fast=False):
    """The full structure-equation system for the general quadratic bracket
    (nine product equations plus the left Leibniz identity for the bracket).
    """
    ops = {'circ': circ, 'star': star, 'bracket': bracket}
    return check_system("quadratic structure equations", T_SYSTEM, ops,
                        fail_fast=fail_fast)


def check_anl(circ, bracket, fail_fast=False):
    """Associative-Novikov-Leibniz compatible pair: circ associative and
    left-symmetric, the three mixed circ/bracket equations, and the bracket
    left Leibniz.
    """
    ops = {'circ': circ, 'bracket': bracket}
    rep = AxiomReport("associative-Novikov-Leibniz axioms")
    check_system("", R_PRODUCT_EQS + R_MIXED_EQS + [LEFT_LEIBNIZ_EQ], ops,
                 fail_fast=fail_fast, report=rep)
    return rep


def check_associative_novikov(circ, fail_fast=False):
    """Associative Novikov product: (x y) z = x (y z) and
    x (y z) = (-1)^{|x||y|} y (x z)."""
    return check_system("associative Novikov axioms", R_PRODUCT_EQS,
                        {'circ': circ}, fail_fast=fail_fast)


def check_novikov(circ, fail_fast=False):
    """(Left) Novikov product: right-symmetry of the product in the last two
    slots and super left-symmetry of the associator."""
    return check_system("Novikov axioms", NOVIKOV_SYSTEM, {'circ': circ},
                        fail_fast=fail_fast)


def check_gd_bialgebra(circ, bracket, fail_fast=False):
    """Novikov product + Lie superbracket + the compatibility equation."""
    rep = AxiomReport("Gelfand-Dorfman compatibility axioms")
    lie = check_lie_superalgebra(bracket, fail_fast=fail_fast)
    rep.checked += lie.checked
    for f in lie.failures:
        rep.record(f["identity"], f["at"], f["residual"])
    if fail_fast and not rep.passed:
        return rep
    check_system("", NOVIKOV_SYSTEM + [PRODUCT_BRACKET_COMPAT_EQ],
                 {'circ': circ, 'bracket': bracket},
                 fail_fast=fail_fast, report=rep)
    return rep


def check_symmetrized_case(circ, bracket, fail_fast=False):
    """Structure equations for star = circ + its super flip: Novikov circ,
    the three mixed equations of that case, and the bracket left Leibniz."""
    ops = {'circ': circ, 'bracket': bracket}
    return check_system("symmetrized-star structure equations",
                        NOVIKOV_SYSTEM + K_SYSTEM + [LEFT_LEIBNIZ_EQ], ops,
                        fail_fast=fail_fast)


def check_star_trivial_case(circ, bracket, fail_fast=False):
    """Structure equations when star = 0."""
    ops = {'circ': circ, 'bracket': bracket}
    return check_system("star-trivial structure equations",
                        STAR_TRIVIAL_SYSTEM, ops, fail_fast=fail_fast)


def check_circ_trivial_case(star, bracket, fail_fast=False):
    """Structure equations when circ = 0."""
    ops = {'star': star, 'bracket': bracket}
    return check_system("circ-trivial structure equations",
                        CIRC_TRIVIAL_SYSTEM, ops, fail_fast=fail_fast)


def check_averaging(product, avg, fail_fast=False):
    """product must be supercommutative + associative and avg an even linear
    operator with avg(avg(x) y) = avg(x) avg(y) on basis pairs."""
    space = product.space
    rep = AxiomReport("averaging operator axioms")
    comm = check_supercommutative(product, fail_fast=fail_fast)
    asso = check_associative(product, fail_fast=fail_fast)
    for sub in (comm, asso):
        rep.checked += sub.checked
        for f in sub.failures:
            rep.record(f["identity"], f["at"], f["residual"])
    if fail_fast and not rep.passed:
        return rep
    for i in range(space.dim):
        for j in range(space.dim):
            rep.checked += 1
            res = space.sub(avg(product(avg(i), space.basis_vec(j))),
                            product.apply_vec(avg(i), avg(j)))
            if not space.vec_is_zero(res):
                rep.record("averaging identity",
                           (space.names[i], space.names[j]),
                           space.vec_str(res))
                if fail_fast:
                    return rep
    return rep


def build_assoc_novikov_from_averaging(product, avg):
    """x circ y = avg(x) y.  For an averaging operator on a supercommutative
    associative product this circ is associative Novikov."""
    space = product.space
    out = GradedBilinearMap(space, name='circ')
    for i in range(space.dim):
        for j in range(space.dim):
            vec = product(avg(i), space.basis_vec(j))
            if not space.vec_is_zero(vec):
                out.set_entry(i, j, vec)
    return out


# ---------- classification of compatible brackets ----------

def _require_rational(gbm, what):
    for vec in gbm.table.values():
        for c in vec.values():
            if not c.is_rational():
                raise ValueError(
                    "%s has parameter entries; substitute rational values "
                    "for the parameters first" % what)


def _eval_linear_expr(expr, circ, space, vecs, admissible_index):
    """Evaluate an expression whose bracket is unknown.

    Returns (const_vec, linear) where linear maps an unknown index (position
    of an admissible (i, j, k) triple) to a {coordinate: Fraction} vector of
    its coefficient in the result.  Products of two bracket-dependent values
    raise (would be quadratic).
    """
    if expr[0] == 'slot':
        return vecs[expr[1]], {}
    _, opname, left, right = expr
    lconst, llin = _eval_linear_expr(left, circ, space, vecs, admissible_index)
    rconst, rlin = _eval_linear_expr(right, circ, space, vecs, admissible_index)
    if llin and rlin:
        raise ValueError("expression is quadratic in the unknown bracket")
    if opname == 'circ':
        const = circ.apply_vec(lconst, rconst)
        lin = {}
        for u, vec in llin.items():
            prod = circ.apply_vec(vec, rconst)
            if not space.vec_is_zero(prod):
                lin[u] = prod
        for u, vec in rlin.items():
            prod = circ.apply_vec(lconst, vec)
            if not space.vec_is_zero(prod):
                lin[u] = space.add(lin.get(u, space.zero_vec()), prod)
        return const, lin
    assert opname == 'bracket'
    if llin or rlin:
        raise ValueError("nested unknown brackets are quadratic")
    lin = {}
    for p, cp in lconst.items():
        for q, cq in rconst.items():
            coeff = cp * cq
            if coeff.is_zero():
                continue
            for k in range(space.dim):
                u = admissible_index.get((p, q, k))
                if u is None:
                    continue
                vec = lin.setdefault(u, space.zero_vec())
                lin[u] = space.add(vec, space.basis_vec(k, coeff))
    return space.zero_vec(), lin


class ClassificationResult:
    """Everything classify_brackets found: admissible unknown order, the
    linear-solution basis, the parametric bracket family, and any quadratic
    constraints that could not be resolved automatically."""

    def __init__(self, space, triples, basis, family_space, family,
                 preconditions, constraints):
        self.space = space
        self.triples = triples          # unknown order: admissible (i, j, k)
        self.basis = basis              # list of Fraction tuples
        self.family_space = family_space
        self.family = family            # GradedBilinearMap over t-parameters
        self.preconditions = preconditions  # AxiomReport for circ alone
        self.constraints = constraints  # rendered unresolved constraints

    @property
    def dimension(self):
        return len(self.basis)

    def bracket_at(self, values):
        """Instantiate the family at rational parameter values (a list, one
        per family parameter).  The result lives on the original space."""
        assert len(values) == self.dimension
        assignments = {name: values[i]
                       for i, name in enumerate(self.family_space.params)}
        sub = self.family.substitute_params(assignments)
        out = GradedBilinearMap(self.space, name='bracket')
        for (i, j), vec in sub.table.items():
            out.set_entry(i, j, dict(vec))
        return out

    def __str__(self):
        lines = ["compatible brackets: %d-parameter family" % self.dimension]
        if not self.preconditions.passed:
            lines.append("  (product preconditions FAILED; family is for "
                         "the mixed + Leibniz equations only)")
        for line in self.family.entries_str():
            lines.append("  " + line)
        for c in self.constraints:
            lines.append("  unresolved constraint: %s = 0" % c)
        return "\n".join(lines)


def classify_brackets(circ):
    """All brackets making (circ, bracket) satisfy the three mixed
    circ/bracket equations and the left Leibniz identity, as an exact
    parametric family.

    The mixed equations are linear in the bracket and become one big exact
    linear system; the left Leibniz identity is quadratic and is checked
    symbolically on the resulting family, solving any constraints that turn
    out to be linear and reporting the rest verbatim.
    """
    space = circ.space
    _require_rational(circ, "circ")
    triples = [(i, j, k)
               for i in range(space.dim)
               for j in range(space.dim)
               for k in range(space.dim)
               if (space.parity(i) + space.parity(j)) % 2 == space.parity(k)]
    admissible_index = {t: u for u, t in enumerate(triples)}

    preconditions = check_system("product axioms", R_PRODUCT_EQS,
                                 {'circ': circ})

    # linear rows from the mixed equations
    rows = []
    for name, terms in R_MIXED_EQS:
        for i in range(space.dim):
            for j in range(space.dim):
                for k in range(space.dim):
                    vecs = {'x': space.basis_vec(i), 'y': space.basis_vec(j),
                            'z': space.basis_vec(k)}
                    parities = {'x': space.parity(i), 'y': space.parity(j),
                                'z': space.parity(k)}
                    lin_total = {}
                    for coeff, sign_pairs, expr in terms:
                        s = coeff * _term_sign(sign_pairs, parities)
                        _, lin = _eval_linear_expr(expr, circ, space, vecs,
                                                   admissible_index)
                        for u, vec in lin.items():
                            for coord, c in vec.items():
                                key = (coord, u)
                                lin_total[key] = (lin_total.get(key, Fraction(0))
                                                  + s * c.rational_value())
                    by_coord = {}
                    for (coord, u), c in lin_total.items():
                        if c != 0:
                            by_coord.setdefault(coord, {})[u] = c
                    rows.extend(by_coord.values())

    basis = linalg.nullspace(rows, len(triples))

    # left Leibniz on the parametric family, symbolically
    def family_from(vectors):
        params = tuple("t%d" % i for i in range(len(vectors)))
        fspace = SuperSpace(list(zip(space.names, space.parities)),
                            params=params, killed=space.killed)
        fam = GradedBilinearMap(fspace, name='bracket')
        entries = {}
        for v, vec in enumerate(vectors):
            tv = Scalar.param(params[v], params) if params else None
            for u, c in enumerate(vec):
                if c == 0:
                    continue
                i, j, k = triples[u]
                cur = entries.setdefault((i, j), {})
                cur[k] = cur.get(k, Scalar.zero(params)) + tv * Scalar.rational(c, params)
        for (i, j), vec in entries.items():
            fam.set_entry(i, j, vec)
        return fspace, fam

    fspace, fam = family_from(basis)
    constraints = []
    if basis:
        rep = check_left_leibniz_superalgebra(fam)
        if not rep.passed:
            # gather the residual scalars; solve the linear ones
            residual_scalars = []
            for i in range(fspace.dim):
                for j in range(fspace.dim):
                    for k in range(fspace.dim):
                        res = fspace.sub(
                            fam(i, fam(j, k)),
                            fspace.add(fam(fam(i, j), k),
                                       fspace.scale(sign(fspace.parity(i),
                                                         fspace.parity(j)),
                                                    fam(j, fam(i, k)))))
                        for c in res.values():
                            if not c.is_zero():
                                residual_scalars.append(c)
            linear_rows = []
            for s in residual_scalars:
                if all(sum(e) <= 1 for e in s.terms):
                    row = {}
                    for expo, c in s.terms.items():
                        assert sum(expo) == 1, "nonzero constant residual"
                        row[expo.index(1)] = c
                    linear_rows.append(row)
                else:
                    constraints.append(str(s))
            if linear_rows and not constraints:
                refine = linalg.nullspace(linear_rows, len(basis))
                new_basis = []
                for r in refine:
                    vec = [Fraction(0)] * len(triples)
                    for v, coef in enumerate(r):
                        for u in range(len(triples)):
                            vec[u] += coef * basis[v][u]
                    new_basis.append(tuple(vec))
                basis = linalg.span_basis(new_basis, len(triples))
                fspace, fam = family_from(basis)

    return ClassificationResult(space, triples, basis, fspace, fam,
                                preconditions, constraints)
