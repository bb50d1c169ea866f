"""Conformal superalgebras with polynomial lambda-brackets, exactly.

Elements live in the free module Q[d] (x) V over a SuperSpace V, where d is
the translation generator; bracket values additionally carry the attachment
variables l (lambda), m (mu) and a transient n (nu).  A VPoly is a sparse sum
of terms

    scalar * d^dd l^dl m^dm n^dn * e_k

stored as {(k, dd, dl, dm, dn): Scalar}.  A LambdaBracket stores the products
[e_i _l e_j] as VPolys in d and l only; apply_bracket extends them to the
whole module by the conformal sesquilinearity rules

    [d a _v b] = -v [a _v b],      [a _v d b] = (d + v) [a _v b]

with v the variable being attached.  Nested brackets attach a fresh variable
and then substitute (n -> l + m, n -> -m - d, ...); substitution is plain
polynomial substitution since the module is free.

Basis vectors listed in space.killed are annihilated by d (used for central
elements): any term d^k e with k >= 1 on a killed e is dropped during
normalization, which is exactly why substituting n -> -m - d into a killed
vector's coefficient lands on the value at -m.
"""

from fractions import Fraction

from .scalars import Scalar, binom
from .superspace import AxiomReport, GradedBilinearMap, sign

# axis position of each variable inside a term key (k, dd, dl, dm, dn)
_AXIS = {'d': 1, 'l': 2, 'm': 3, 'n': 4}
_VARS = ('d', 'l', 'm', 'n')


class ConformalError(Exception):
    pass


class VariableCaptureError(ConformalError):
    """Attaching a bracket with a variable that already occurs in an input."""


def _varpoly_mul(p, q):
    """Multiply two polynomials in the variables d,l,m,n with Fraction
    coefficients, stored as {(dd,dl,dm,dn): Fraction}."""
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            val = out.get(e, Fraction(0)) + c1 * c2
            if val == 0:
                out.pop(e, None)
            else:
                out[e] = val
    return out


def _varpoly_linear(coeffs):
    """{(exponents): coeff} form of a linear combination {var: coeff}."""
    out = {}
    for var, c in coeffs.items():
        c = Fraction(c)
        if c == 0:
            continue
        e = [0, 0, 0, 0]
        e[_AXIS[var] - 1] = 1
        out[tuple(e)] = c
    return out


def _varpoly_pow(linear, t):
    out = {(0, 0, 0, 0): Fraction(1)}
    base = _varpoly_linear(linear)
    for _ in range(t):
        out = _varpoly_mul(out, base)
    return out


class VPoly:
    """A sparse element of Q[d, l, m, n] (x) V with Scalar coefficients."""

    __slots__ = ('space', 'terms')

    def __init__(self, space, terms=None):
        self.space = space
        clean = {}
        if terms:
            for key, coeff in terms.items():
                k, dd, dl, dm, dn = key
                coeff = Scalar.coerce(coeff, space.params)
                if coeff.is_zero():
                    continue
                if dd >= 1 and space.is_killed(k):
                    continue  # d annihilates killed vectors
                prev = clean.get(key)
                total = coeff if prev is None else prev + coeff
                if total.is_zero():
                    clean.pop(key, None)
                else:
                    clean[key] = total
        self.terms = clean

    # ---------- constructors ----------

    @classmethod
    def zero(cls, space):
        return cls(space, {})

    @classmethod
    def monomial(cls, space, k, dd=0, dl=0, dm=0, dn=0, coeff=1):
        if isinstance(k, str):
            k = space.index(k)
        return cls(space, {(k, dd, dl, dm, dn): coeff})

    @classmethod
    def vector(cls, space, vec):
        """Embed a classical vector {k: Scalar} (names or indices)."""
        return cls(space, {(space.index(k) if isinstance(k, str) else k,
                            0, 0, 0, 0): c for k, c in vec.items()})

    # ---------- arithmetic ----------

    def __add__(self, other):
        assert self.space is other.space
        terms = dict(self.terms)
        out = VPoly(self.space, {})
        out.terms = terms
        for key, coeff in other.terms.items():
            prev = terms.get(key)
            total = coeff if prev is None else prev + coeff
            if total.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = total
        return VPoly(self.space, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        s = Scalar.coerce(s, self.space.params)
        return VPoly(self.space,
                     {key: s * c for key, c in self.terms.items()})

    def times_monomial(self, dd=0, dl=0, dm=0, dn=0):
        return VPoly(self.space,
                     {(k, a + dd, b + dl, c + dm, e + dn): s
                      for (k, a, b, c, e), s in self.terms.items()})

    def times_varpoly(self, vp):
        """Multiply by a {(dd,dl,dm,dn): Fraction} polynomial."""
        out = {}
        for (k, a, b, c, e), s in self.terms.items():
            for (dd, dl, dm, dn), f in vp.items():
                key = (k, a + dd, b + dl, c + dm, e + dn)
                add = s * f
                prev = out.get(key)
                total = add if prev is None else prev + add
                out[key] = total
        return VPoly(self.space, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, VPoly) and self.space is other.space
                and (self - other).is_zero())

    def __hash__(self):
        raise TypeError("VPoly is unhashable")

    # ---------- structure ----------

    def degree(self, var):
        axis = _AXIS[var]
        return max((key[axis] for key in self.terms), default=-1)

    def coefficient(self, var, power):
        """The coefficient of var^power (the variable is consumed)."""
        axis = _AXIS[var]
        terms = {}
        for key, c in self.terms.items():
            if key[axis] == power:
                new = list(key)
                new[axis] = 0
                terms[tuple(new)] = c
        return VPoly(self.space, terms)

    def uses(self, var):
        axis = _AXIS[var]
        return any(key[axis] > 0 for key in self.terms)

    def substitute(self, var, replacement):
        """Substitute a linear form for a variable: replacement maps variable
        names ('d','l','m','n') to rational coefficients, e.g. n -> l + m is
        substitute('n', {'l': 1, 'm': 1})."""
        axis = _AXIS[var]
        powers = {}
        out = VPoly.zero(self.space)
        for key, c in self.terms.items():
            t = key[axis]
            base = list(key)
            base[axis] = 0
            piece = VPoly(self.space, {tuple(base): c})
            if t:
                if t not in powers:
                    powers[t] = _varpoly_pow(replacement, t)
                piece = piece.times_varpoly(powers[t])
            out = out + piece
        return out

    def classical_vector(self):
        """The underlying {k: Scalar} vector of a variable-free VPoly."""
        vec = {}
        for (k, dd, dl, dm, dn), c in self.terms.items():
            assert dd == dl == dm == dn == 0, "not a classical vector"
            vec[k] = c
        return vec

    def vec_parity(self):
        parities = {self.space.parity(key[0]) for key in self.terms}
        if not parities:
            return None
        assert len(parities) == 1, "not homogeneous"
        return parities.pop()

    # ---------- printing ----------

    def __str__(self):
        if not self.terms:
            return "0"
        per_basis = {}
        for (k, dd, dl, dm, dn), c in self.terms.items():
            per_basis.setdefault(k, {})[(dd, dl, dm, dn)] = c
        pieces = []
        for k in sorted(per_basis):
            poly = per_basis[k]
            mono_strs = []
            ordered = sorted(poly.items(),
                             key=lambda it: (-sum(it[0]),
                                             tuple(-e for e in it[0])))
            for expo, c in ordered:
                factors = []
                for name, e in zip(_VARS, expo):
                    if e == 1:
                        factors.append(name)
                    elif e > 1:
                        factors.append("%s^%d" % (name, e))
                cs = str(c)
                composite = ("+" in cs[1:]) or ("-" in cs[1:]) or (" " in cs)
                if not factors:
                    body = "(%s)" % cs if composite else cs
                elif cs == "1":
                    body = " ".join(factors)
                elif cs == "-1":
                    body = "-" + " ".join(factors)
                elif composite:
                    body = "(%s) %s" % (cs, " ".join(factors))
                else:
                    body = "%s %s" % (cs, " ".join(factors))
                mono_strs.append(body)
            joined = mono_strs[0]
            for ms in mono_strs[1:]:
                joined += (" - " + ms[1:]) if ms.startswith("-") else (" + " + ms)
            name = self.space.names[k]
            already_wrapped = (len(mono_strs) == 1 and joined.startswith("(")
                               and joined.endswith(")"))
            if already_wrapped:
                pieces.append("%s %s" % (joined, name))
            elif len(mono_strs) > 1 or " " in joined or joined.startswith("-"):
                pieces.append("(%s) %s" % (joined, name))
            else:
                pieces.append("%s %s" % (joined, name) if joined != "1" else name)
        return " + ".join(pieces)

    def __repr__(self):
        return "VPoly(%s)" % self


class LambdaBracket:
    """A conformal bracket stored by its values on basis pairs.

    entries[(i, j)] is [e_i _l e_j] as a VPoly in d and l only.  Missing
    pairs are zero.  Grading is enforced the same way as for classical
    structure constants (d and l are even).
    """

    def __init__(self, space, entries=None, name=None):
        self.space = space
        self.name = name
        self.entries = {}
        if entries:
            for (i, j), vp in entries.items():
                self.set_entry(i, j, vp)

    def _idx(self, i):
        return self.space.index(i) if isinstance(i, str) else i

    def set_entry(self, i, j, vp):
        i, j = self._idx(i), self._idx(j)
        if not isinstance(vp, VPoly):
            vp = VPoly.vector(self.space, vp)
        assert not vp.uses('m') and not vp.uses('n'), \
            "bracket entries are polynomials in d and l only"
        want = (self.space.parity(i) + self.space.parity(j)) % 2
        for (k, dd, dl, dm, dn) in vp.terms:
            if self.space.parity(k) != want:
                raise ConformalError(
                    "grading violated in bracket entry (%s, %s)"
                    % (self.space.names[i], self.space.names[j]))
        if vp.is_zero():
            self.entries.pop((i, j), None)
        else:
            self.entries[(i, j)] = vp

    def entry(self, i, j):
        vp = self.entries.get((self._idx(i), self._idx(j)))
        return vp if vp is not None else VPoly.zero(self.space)

    def max_lambda_degree(self):
        return max((vp.degree('l') for vp in self.entries.values()),
                   default=-1)

    def entries_str(self):
        lines = []
        for (i, j) in sorted(self.entries):
            lines.append("(%s, %s) -> %s" % (self.space.names[i],
                                             self.space.names[j],
                                             self.entries[(i, j)]))
        return lines

    def substitute_params(self, assignments):
        new_space = self.space.substitute_params(assignments)
        out = LambdaBracket(new_space, name=self.name)
        for (i, j), vp in self.entries.items():
            out.set_entry(i, j, VPoly(new_space,
                                      {key: c.substitute(assignments)
                                       for key, c in vp.terms.items()}))
        return out


def apply_bracket(bracket, x, y, attach):
    """[x _attach y] for x, y in the free module (VPolys).

    attach is 'l', 'm' or 'n': the variable this bracket application binds.
    The d-powers of x and y are consumed by the sesquilinearity rules; any
    l/m/n powers they carry are passive coefficients and multiply through.
    Raises VariableCaptureError if the attachment variable already occurs in
    an input.
    """
    space = bracket.space
    if isinstance(x, dict):
        x = VPoly.vector(space, x)
    if isinstance(y, dict):
        y = VPoly.vector(space, y)
    if x.uses(attach) or y.uses(attach):
        raise VariableCaptureError(
            "attachment variable %r already occurs in an argument" % attach)
    att_axis = _AXIS[attach]
    out = VPoly.zero(space)
    for (kx, ddx, dlx, dmx, dnx), sx in x.terms.items():
        for (ky, ddy, dly, dmy, dny), sy in y.terms.items():
            entry = bracket.entries.get((kx, ky))
            if entry is None:
                continue
            # move the entry's l exponent onto the attachment axis
            moved = {}
            for (k, dd, dl, dm, dn), c in entry.terms.items():
                key = [k, dd, 0, 0, 0]
                key[att_axis] = dl
                key = (k, dd) + tuple(key[2:])
                moved[key] = moved.get(key, Scalar.zero(space.params)) + c
            piece = VPoly(space, moved)
            # (-v)^ddx (d + v)^ddy, v the attachment variable
            vp = _varpoly_pow({attach: -1}, ddx)
            vp = _varpoly_mul(vp, _varpoly_pow({'d': 1, attach: 1}, ddy))
            piece = piece.times_varpoly(vp)
            passive = {'dl': dlx + dly, 'dm': dmx + dmy, 'dn': dnx + dny}
            piece = piece.times_monomial(dl=passive['dl'],
                                         dm=passive['dm'],
                                         dn=passive['dn'])
            out = out + piece.scale(sx * sy)
    return out


def substitute(x, var, replacement):
    """Module-level alias of VPoly.substitute."""
    return x.substitute(var, replacement)


# ---------- axiom checks ----------

def _pairs(space):
    for i in range(space.dim):
        for j in range(space.dim):
            yield i, j


def _triples(space):
    for i in range(space.dim):
        for j in range(space.dim):
            for k in range(space.dim):
                yield i, j, k


def check_conformal_sesquilinearity(bracket, fail_fast=False):
    """[d a _l b] = -l [a _l b] and [a _l d b] = (d + l) [a _l b].

    True by construction for table-derived brackets; kept as an engine
    self-test.
    """
    space = bracket.space
    rep = AxiomReport("conformal sesquilinearity")
    for i, j in _pairs(space):
        rep.checked += 1
        base = apply_bracket(bracket, VPoly.monomial(space, i),
                             VPoly.monomial(space, j), 'l')
        lhs1 = apply_bracket(bracket, VPoly.monomial(space, i, dd=1),
                             VPoly.monomial(space, j), 'l')
        res1 = lhs1 - base.times_varpoly(_varpoly_linear({'l': -1}))
        lhs2 = apply_bracket(bracket, VPoly.monomial(space, i),
                             VPoly.monomial(space, j, dd=1), 'l')
        res2 = lhs2 - base.times_varpoly(_varpoly_linear({'d': 1, 'l': 1}))
        for tag, res in (("first slot", res1), ("second slot", res2)):
            if not res.is_zero():
                rep.record("sesquilinearity (%s)" % tag,
                           (space.names[i], space.names[j]), str(res))
                if fail_fast:
                    return rep
    return rep


def check_conformal_skew(bracket, fail_fast=False):
    """[a _l b] = -(-1)^{|a||b|} [b _{-l-d} a] on basis pairs."""
    space = bracket.space
    rep = AxiomReport("conformal skew-symmetry")
    for i, j in _pairs(space):
        rep.checked += 1
        lhs = apply_bracket(bracket, VPoly.monomial(space, i),
                            VPoly.monomial(space, j), 'l')
        flip = apply_bracket(bracket, VPoly.monomial(space, j),
                             VPoly.monomial(space, i), 'n')
        flip = flip.substitute('n', {'l': -1, 'd': -1})
        res = lhs + flip.scale(sign(space.parity(i), space.parity(j)))
        if not res.is_zero():
            rep.record("skew-symmetry", (space.names[i], space.names[j]),
                       str(res))
            if fail_fast:
                return rep
    return rep


def _leibniz_residual(bracket, i, j, k, left=False):
    """Residual of the conformal Leibniz identity at a basis triple.

    right (default):
        [a _l [b _m c]] - [[a _l b] _{l+m} c]
                        + (-1)^{|b||c|} [[a _l c] _{-m-d} b]
    left:
        [a _l [b _m c]] - [[a _l b] _{l+m} c]
                        - (-1)^{|a||b|} [b _m [a _l c]]
    """
    space = bracket.space
    ei = VPoly.monomial(space, i)
    ej = VPoly.monomial(space, j)
    ek = VPoly.monomial(space, k)
    lhs = apply_bracket(bracket, ei, apply_bracket(bracket, ej, ek, 'm'), 'l')
    inner = apply_bracket(bracket, ei, ej, 'l')
    r1 = apply_bracket(bracket, inner, ek, 'n').substitute('n', {'l': 1, 'm': 1})
    if left:
        r2 = apply_bracket(bracket, ej, apply_bracket(bracket, ei, ek, 'l'), 'm')
        return lhs - r1 - r2.scale(sign(space.parity(i), space.parity(j)))
    r2 = apply_bracket(bracket, apply_bracket(bracket, ei, ek, 'l'), ej, 'n')
    r2 = r2.substitute('n', {'m': -1, 'd': -1})
    return lhs - r1 + r2.scale(sign(space.parity(j), space.parity(k)))


def check_conformal_leibniz(bracket, fail_fast=False):
    """The (right) conformal Leibniz identity on basis triples:
    [a _l [b _m c]] = [[a _l b] _{l+m} c] - (-1)^{|b||c|} [[a _l c] _{-m-d} b].
    """
    space = bracket.space
    rep = AxiomReport("conformal Leibniz identity")
    for i, j, k in _triples(space):
        rep.checked += 1
        res = _leibniz_residual(bracket, i, j, k, left=False)
        if not res.is_zero():
            rep.record("conformal Leibniz",
                       (space.names[i], space.names[j], space.names[k]),
                       str(res))
            if fail_fast:
                return rep
    return rep


def check_conformal_jacobi(bracket, fail_fast=False):
    """The conformal Jacobi identity on basis triples:
    [a _l [b _m c]] = [[a _l b] _{l+m} c] + (-1)^{|a||b|} [b _m [a _l c]].

    This is also the left conformal Leibniz identity when skew-symmetry is
    not assumed.
    """
    space = bracket.space
    rep = AxiomReport("conformal Jacobi identity")
    for i, j, k in _triples(space):
        rep.checked += 1
        res = _leibniz_residual(bracket, i, j, k, left=True)
        if not res.is_zero():
            rep.record("conformal Jacobi",
                       (space.names[i], space.names[j], space.names[k]),
                       str(res))
            if fail_fast:
                return rep
    return rep


def to_left_conformal(bracket):
    """Sign-twisted opposite bracket [a _l b]' = -(-1)^{|a||b|} [b _{-l-d} a].

    Sends right Leibniz conformal structures to left ones and back; applying
    it twice gives back the original bracket.
    """
    space = bracket.space
    out = LambdaBracket(space, name=(bracket.name or "bracket") + "_left")
    for i, j in _pairs(space):
        flip = apply_bracket(bracket, VPoly.monomial(space, j),
                             VPoly.monomial(space, i), 'n')
        flip = flip.substitute('n', {'l': -1, 'd': -1})
        vp = flip.scale(-sign(space.parity(i), space.parity(j)))
        if not vp.is_zero():
            out.set_entry(i, j, vp)
    return out


def jth_products(bracket, i, j):
    """The j-th products a_(n) b = n! (coefficient of l^n in [a _l b]).

    Returns {n: VPoly free of l} for the n with nonzero product.
    """
    space = bracket.space
    vp = bracket.entry(i, j)
    out = {}
    fact = 1
    for n in range(vp.degree('l') + 1):
        if n > 0:
            fact *= n
        coeff = vp.coefficient('l', n).scale(fact)
        if not coeff.is_zero():
            out[n] = coeff
    return out


def build_current(classical_bracket):
    """The current conformal algebra of a classical bracket:
    [a _l b] = [a, b] (constant in l), extended by sesquilinearity.
    """
    space = classical_bracket.space
    out = LambdaBracket(space, name="current")
    for (i, j), vec in classical_bracket.table.items():
        out.set_entry(i, j, VPoly.vector(space, vec))
    return out
