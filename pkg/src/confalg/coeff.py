"""Coefficient (mode) algebras of conformal brackets.

A conformal bracket on Q[d] (x) V spreads each basis vector e into modes
e[m], m in Z, subject to (d e)[m] = -m e[m-1]; killed basis vectors (central
elements) keep only the mode e[-1].  The mode bracket is

    [a[m], b[n]] = sum_t  binom(m, t)  (a_(t) b)[m+n-t]

with a_(t) b the t-th product (t! times the l^t coefficient, so the two
factorials cancel into the falling factorial of m against the plain
coefficient), and (d^k e)[p] contributing (-1)^k p (p-1) ... (p-k+1) e[p-k].
Everything is exact; mode indices may be negative (binomials and falling
factorials of negative arguments are fine).

This module builds mode brackets, checks the (right) Leibniz identity on a
finite grid of modes, and turns polynomial cocycles into the induced mode
2-cocycles (supported where the degree matches m + n + 1) with their own
finite-grid check.
"""

from .scalars import Scalar, falling, binom
from .superspace import AxiomReport, sign
from .conformal import jth_products


class ModeExpr:
    """A finite linear combination of modes: terms {(k, m): Scalar}."""

    def __init__(self, space, terms=None):
        self.space = space
        clean = {}
        if terms:
            for (k, m), c in terms.items():
                c = Scalar.coerce(c, space.params)
                if c.is_zero():
                    continue
                if space.is_killed(k) and m != -1:
                    continue  # killed vectors keep only mode -1
                prev = clean.get((k, m))
                total = c if prev is None else prev + c
                if total.is_zero():
                    clean.pop((k, m), None)
                else:
                    clean[(k, m)] = total
        self.terms = clean

    @classmethod
    def mode(cls, space, k, m, coeff=1):
        if isinstance(k, str):
            k = space.index(k)
        return cls(space, {(k, m): coeff})

    def __add__(self, other):
        assert self.space is other.space
        terms = dict(self.terms)
        for key, c in other.terms.items():
            prev = terms.get(key)
            total = c if prev is None else prev + c
            if total.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = total
        out = ModeExpr(self.space)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        s = Scalar.coerce(s, self.space.params)
        return ModeExpr(self.space,
                        {key: s * c for key, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, ModeExpr) and self.space is other.space
                and (self - other).is_zero())

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (k, m) in sorted(self.terms):
            c = self.terms[(k, m)]
            cs = str(c)
            body = "%s[%d]" % (self.space.names[k], m)
            if cs == "1":
                pieces.append(body)
            elif cs == "-1":
                pieces.append("-" + body)
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                pieces.append("(%s) %s" % (cs, body))
            else:
                pieces.append("%s %s" % (cs, body))
        out = pieces[0]
        for p in pieces[1:]:
            out += (" + " + p) if not p.startswith("-") else (" - " + p[1:])
        return out

    def __repr__(self):
        return "ModeExpr(%s)" % self


class CoeffAlgebra:
    """The mode algebra of a conformal bracket."""

    def __init__(self, bracket):
        self.bracket = bracket
        self.space = bracket.space
        # cache the t-th products as lists of (basis index, d power, Scalar)
        self._products = {}
        for i in range(self.space.dim):
            for j in range(self.space.dim):
                prods = jth_products(bracket, i, j)
                table = {}
                for t, vp in prods.items():
                    table[t] = [(k, dd, c)
                                for (k, dd, dl, dm, dn), c in vp.terms.items()]
                if table:
                    self._products[(i, j)] = table

    def mode_parity(self, i):
        return self.space.parity(i)

    def mode_bracket_basis(self, i, m, j, n):
        """[e_i[m], e_j[n]] as a ModeExpr."""
        if isinstance(i, str):
            i = self.space.index(i)
        if isinstance(j, str):
            j = self.space.index(j)
        out = ModeExpr(self.space)
        table = self._products.get((i, j))
        if not table:
            return out
        for t, entries in table.items():
            factor = binom(m, t)
            if factor == 0:
                continue
            for (k, dd, c) in entries:
                pos = m + n - t
                coeff = c * Scalar.rational(factor * (-1) ** dd
                                            * falling(pos, dd),
                                            self.space.params)
                out = out + ModeExpr(self.space, {(k, pos - dd): coeff})
        return out

    def mode_bracket(self, u, v):
        """Bilinear extension to ModeExprs (or (index, mode) pairs)."""
        if isinstance(u, tuple):
            u = ModeExpr.mode(self.space, *u)
        if isinstance(v, tuple):
            v = ModeExpr.mode(self.space, *v)
        out = ModeExpr(self.space)
        for (i, m), ci in u.terms.items():
            for (j, n), cj in v.terms.items():
                out = out + self.mode_bracket_basis(i, m, j, n).scale(ci * cj)
        return out

    def table_lines(self, grid):
        """Rendered mode brackets over a grid of mode indices."""
        lines = []
        for i in range(self.space.dim):
            for j in range(self.space.dim):
                for m in grid:
                    for n in grid:
                        val = self.mode_bracket_basis(i, m, j, n)
                        if not val.is_zero():
                            lines.append("[%s[%d], %s[%d]] = %s"
                                         % (self.space.names[i], m,
                                            self.space.names[j], n, val))
        return lines

    def check_leibniz(self, grid, fail_fast=False):
        """Right Leibniz identity on modes over a finite grid:
        [x, [y, z]] = [[x, y], z] - (-1)^{|y||z|} [[x, z], y]."""
        space = self.space
        rep = AxiomReport("mode-algebra right Leibniz identity")
        grid = list(grid)
        for i in range(space.dim):
            for j in range(space.dim):
                for k in range(space.dim):
                    s = sign(space.parity(j), space.parity(k))
                    for m in grid:
                        for n in grid:
                            for p in grid:
                                rep.checked += 1
                                xm, yn, zp = (i, m), (j, n), (k, p)
                                res = self.mode_bracket(
                                    xm, self.mode_bracket(yn, zp))
                                res = res - self.mode_bracket(
                                    self.mode_bracket(xm, yn), zp)
                                res = res + self.mode_bracket(
                                    self.mode_bracket(xm, zp), yn).scale(s)
                                if not res.is_zero():
                                    rep.record(
                                        "right Leibniz",
                                        ("%s[%d]" % (space.names[i], m),
                                         "%s[%d]" % (space.names[j], n),
                                         "%s[%d]" % (space.names[k], p)),
                                        str(res))
                                    if fail_fast:
                                        return rep
        return rep


def coeff_bracket(bracket, i, m, j, n):
    """One mode bracket [e_i[m], e_j[n]] straight from a conformal bracket."""
    return CoeffAlgebra(bracket).mode_bracket_basis(i, m, j, n)


def check_coeff_leibniz(bracket_or_coeff, grid, fail_fast=False):
    """Right Leibniz identity for the mode algebra on a grid of modes."""
    coeff = bracket_or_coeff
    if not isinstance(coeff, CoeffAlgebra):
        coeff = CoeffAlgebra(coeff)
    return coeff.check_leibniz(grid, fail_fast=fail_fast)


# ---------- mode 2-cocycles from polynomial cocycles ----------

class PhiCocycle:
    """The mode 2-cocycle induced by a polynomial cocycle alpha:

        phi(a[m], b[n]) = m (m-1) ... (m-t+1) alpha_t(a, b)
                          where t = m + n + 1 (zero if t < 0 or alpha_t = 0).
    """

    def __init__(self, ansatz):
        self.ansatz = ansatz
        self.space = ansatz.space

    def value(self, i, m, j, n):
        if isinstance(i, str):
            i = self.space.index(i)
        if isinstance(j, str):
            j = self.space.index(j)
        t = m + n + 1
        if t < 0:
            return Scalar.zero(self.ansatz.space.params)
        return self.ansatz.alpha(t, i, j) * Scalar.rational(
            falling(m, t), self.ansatz.space.params)

    def on_modes(self, u, v):
        """Bilinear extension to ModeExprs (or (index, mode) pairs)."""
        space = self.space
        if isinstance(u, tuple):
            u = ModeExpr.mode(space, *u)
        if isinstance(v, tuple):
            v = ModeExpr.mode(space, *v)
        total = Scalar.zero(self.ansatz.space.params)
        for (i, m), ci in u.terms.items():
            for (j, n), cj in v.terms.items():
                total = total + ci * cj * self.value(i, m, j, n)
        return total

    def __str__(self):
        if self.ansatz.is_zero():
            return "phi = 0"
        names = self.space.names
        parts = []
        for (t, p, q) in sorted(self.ansatz.entries):
            val = self.ansatz.entries[(t, p, q)]
            factor = " ".join("(m-%d)" % r if r else "m" for r in range(t))
            vs = str(val)
            if ("+" in vs[1:]) or ("-" in vs[1:]):
                vs = "(%s)" % vs
            if factor:
                body = factor if vs == "1" else "%s %s" % (factor, vs)
            else:
                body = vs
            parts.append("phi(%s[m], %s[n]) += %s when m + n = %d"
                         % (names[p], names[q], body, t - 1))
        return "; ".join(parts)


def build_phi_cocycles(source):
    """PhiCocycles from a CocycleAnsatz (one) or a cocycle SolutionSpace
    (one per basis vector)."""
    if hasattr(source, 'ansatzes'):
        return [PhiCocycle(a) for a in source.ansatzes()]
    return PhiCocycle(source)


def check_phi_cocycle(coeff, phi, grid, fail_fast=False):
    """The 2-cocycle identity for the mode algebra on a grid:
    phi(x, [y, z]) = phi([x, y], z) - (-1)^{|y||z|} phi([x, z], y)."""
    if not isinstance(coeff, CoeffAlgebra):
        coeff = CoeffAlgebra(coeff)
    space = coeff.space
    rep = AxiomReport("mode 2-cocycle identity")
    grid = list(grid)
    for i in range(space.dim):
        for j in range(space.dim):
            for k in range(space.dim):
                s = sign(space.parity(j), space.parity(k))
                for m in grid:
                    for n in grid:
                        for p in grid:
                            rep.checked += 1
                            xm, yn, zp = (i, m), (j, n), (k, p)
                            res = phi.on_modes(xm, coeff.mode_bracket(yn, zp))
                            res = res - phi.on_modes(
                                coeff.mode_bracket(xm, yn), zp)
                            res = res + phi.on_modes(
                                coeff.mode_bracket(xm, zp), yn) * Scalar.rational(s, res.params)
                            if not res.is_zero():
                                rep.record(
                                    "2-cocycle identity",
                                    ("%s[%d]" % (space.names[i], m),
                                     "%s[%d]" % (space.names[j], n),
                                     "%s[%d]" % (space.names[k], p)),
                                    str(res))
                                if fail_fast:
                                    return rep
    return rep
