"""Finite-dimensional Z/2-graded vector spaces with exact structure constants.

A SuperSpace is a list of named basis vectors, each even (parity 0) or odd
(parity 1), over the Scalar ring (rationals, possibly with parameters).
Vectors are sparse dicts {basis index: Scalar}.  A GradedBilinearMap stores a
product by structure constants and enforces the grading
parity(x * y) = parity(x) + parity(y).

The classical axiom checks live here: super skew-symmetry + Jacobi (Lie),
the right Leibniz identity, the left Leibniz identity, and the sign-twisted
conversion between right and left Leibniz structures.
"""

from .scalars import Scalar, ScalarError


class SuperSpace:
    """Named graded basis + the ambient parameter list.

    killed lists basis vectors that the derivation of the conformal layer
    annihilates (used for central elements); the classical layer just carries
    the set along.
    """

    def __init__(self, basis, params=(), killed=()):
        # basis: iterable of (name, parity) with parity 0 (even) or 1 (odd)
        self.names = []
        self.parities = []
        for name, parity in basis:
            assert parity in (0, 1), "parity must be 0 or 1"
            self.names.append(name)
            self.parities.append(parity)
        assert len(set(self.names)) == len(self.names), "duplicate basis name"
        self.params = tuple(params)
        self.killed = frozenset(killed)
        for k in self.killed:
            assert k in self.names, "killed vector %r is not in the basis" % k
        self._index = {n: i for i, n in enumerate(self.names)}

    @property
    def dim(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def parity(self, i):
        if isinstance(i, str):
            i = self._index[i]
        return self.parities[i]

    def is_killed(self, i):
        if isinstance(i, str):
            return i in self.killed
        return self.names[i] in self.killed

    # ---------- vectors ----------

    def zero_vec(self):
        return {}

    def basis_vec(self, i, coeff=1):
        if isinstance(i, str):
            i = self._index[i]
        c = Scalar.coerce(coeff, self.params)
        return {i: c} if not c.is_zero() else {}

    def scale(self, s, vec):
        s = Scalar.coerce(s, self.params)
        out = {}
        for k, c in vec.items():
            prod = s * c
            if not prod.is_zero():
                out[k] = prod
        return out

    def add(self, *vecs):
        out = {}
        for vec in vecs:
            for k, c in vec.items():
                tot = out.get(k, Scalar.zero(self.params)) + c
                if tot.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = tot
        return out

    def sub(self, u, v):
        return self.add(u, self.scale(-1, v))

    def vec_is_zero(self, vec):
        return all(c.is_zero() for c in vec.values())

    def vec_eq(self, u, v):
        return self.vec_is_zero(self.sub(u, v))

    def vec_parity(self, vec):
        """Parity of a homogeneous vector (None for 0, error if mixed)."""
        parities = {self.parity(k) for k, c in vec.items() if not c.is_zero()}
        if not parities:
            return None
        assert len(parities) == 1, "vector is not homogeneous"
        return parities.pop()

    def vec_str(self, vec):
        items = sorted(((k, c) for k, c in vec.items() if not c.is_zero()))
        if not items:
            return "0"
        pieces = []
        for k, c in items:
            cs = str(c)
            if cs == "1":
                pieces.append(self.names[k])
            elif cs == "-1":
                pieces.append("-" + self.names[k])
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                pieces.append("(%s) %s" % (cs, self.names[k]))
            else:
                pieces.append("%s %s" % (cs, self.names[k]))
        out = pieces[0]
        for p in pieces[1:]:
            out += (" + " + p) if not p.startswith("-") else (" - " + p[1:])
        return out

    def substitute_params(self, assignments):
        """A copy of this space over the parameters left after substitution."""
        remaining = tuple(p for p in self.params if p not in assignments)
        return SuperSpace(list(zip(self.names, self.parities)),
                          params=remaining,
                          killed=self.killed)


def sign(p, q):
    """The Koszul sign (-1)^{p q} for parities p, q."""
    return -1 if (p % 2) and (q % 2) else 1


class GradedBilinearMap:
    """A bilinear product on a SuperSpace given by structure constants.

    table maps a pair of basis names (or indices) to a vector; missing pairs
    are zero.  Construction checks the grading: every basis vector appearing
    in table[(i, j)] must have parity parity(i) + parity(j).
    """

    def __init__(self, space, table=None, name=None):
        self.space = space
        self.name = name
        self.table = {}
        if table:
            for (i, j), vec in table.items():
                self.set_entry(i, j, vec)

    def _idx(self, i):
        return self.space.index(i) if isinstance(i, str) else i

    def set_entry(self, i, j, vec):
        i, j = self._idx(i), self._idx(j)
        clean = {}
        want = (self.space.parity(i) + self.space.parity(j)) % 2
        for k, c in vec.items():
            k = self._idx(k)
            c = Scalar.coerce(c, self.space.params)
            if c.is_zero():
                continue
            if self.space.parity(k) != want:
                raise ScalarError(
                    "grading violated: (%s, %s) -> %s has parity %d, expected %d"
                    % (self.space.names[i], self.space.names[j],
                       self.space.names[k], self.space.parity(k), want))
            clean[k] = c
        if clean:
            self.table[(i, j)] = clean
        else:
            self.table.pop((i, j), None)

    def entry(self, i, j):
        return dict(self.table.get((self._idx(i), self._idx(j)), {}))

    def apply_vec(self, u, v):
        out = self.space.zero_vec()
        for i, ci in u.items():
            for j, cj in v.items():
                e = self.table.get((i, j))
                if e:
                    out = self.space.add(out, self.space.scale(ci * cj, e))
        return out

    def __call__(self, u, v):
        if isinstance(u, (int, str)):
            u = self.space.basis_vec(u)
        if isinstance(v, (int, str)):
            v = self.space.basis_vec(v)
        return self.apply_vec(u, v)

    def is_zero(self):
        return all(self.space.vec_is_zero(v) for v in self.table.values())

    def entries_str(self):
        lines = []
        for (i, j) in sorted(self.table):
            lines.append("(%s, %s) -> %s" % (self.space.names[i],
                                             self.space.names[j],
                                             self.space.vec_str(self.table[(i, j)])))
        return lines

    def substitute_params(self, assignments):
        new_space = self.space.substitute_params(assignments)
        out = GradedBilinearMap(new_space, name=self.name)
        for (i, j), vec in self.table.items():
            out.set_entry(i, j, {k: c.substitute(assignments)
                                 for k, c in vec.items()})
        return out


class AxiomReport:
    """Result of checking an identity system: passed flag + the failures.

    Each failure records which identity broke, at which basis tuple, and the
    (rendered) nonzero residual.
    """

    def __init__(self, name):
        self.name = name
        self.passed = True
        self.failures = []
        self.checked = 0

    def record(self, identity, at, residual_str):
        self.passed = False
        self.failures.append({"identity": identity,
                              "at": tuple(at),
                              "residual": residual_str})

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return "%s: passed (%d instances checked)" % (self.name, self.checked)
        lines = ["%s: FAILED (%d failures / %d instances)"
                 % (self.name, len(self.failures), self.checked)]
        for f in self.failures:
            lines.append("  %s at (%s): residual %s"
                         % (f["identity"], ", ".join(f["at"]), f["residual"]))
        return "\n".join(lines)


def _basis_pairs(space):
    for i in range(space.dim):
        for j in range(space.dim):
            yield i, j


def _basis_triples(space):
    for i in range(space.dim):
        for j in range(space.dim):
            for k in range(space.dim):
                yield i, j, k


def check_skew_symmetry(bracket, fail_fast=False, report=None):
    """Super skew-symmetry [x, y] = -(-1)^{|x||y|} [y, x] on basis pairs."""
    space = bracket.space
    rep = report or AxiomReport("super skew-symmetry")
    for i, j in _basis_pairs(space):
        rep.checked += 1
        res = space.add(bracket(i, j),
                        space.scale(sign(space.parity(i), space.parity(j)),
                                    bracket(j, i)))
        if not space.vec_is_zero(res):
            rep.record("skew-symmetry", (space.names[i], space.names[j]),
                       space.vec_str(res))
            if fail_fast:
                return rep
    return rep


def check_left_leibniz_superalgebra(bracket, fail_fast=False, report=None):
    """Left Leibniz identity:
    [x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]].
    """
    space = bracket.space
    rep = report or AxiomReport("left Leibniz identity")
    for i, j, k in _basis_triples(space):
        rep.checked += 1
        res = space.sub(bracket(i, bracket(j, k)),
                        space.add(bracket(bracket(i, j), k),
                                  space.scale(sign(space.parity(i), space.parity(j)),
                                              bracket(j, bracket(i, k)))))
        if not space.vec_is_zero(res):
            rep.record("left Leibniz",
                       (space.names[i], space.names[j], space.names[k]),
                       space.vec_str(res))
            if fail_fast:
                return rep
    return rep


def check_leibniz_superalgebra(bracket, fail_fast=False):
    """Right Leibniz identity (the convention used throughout):
    [x, [y, z]] = [[x, y], z] - (-1)^{|y||z|} [[x, z], y].
    """
    space = bracket.space
    rep = AxiomReport("right Leibniz identity")
    for i, j, k in _basis_triples(space):
        rep.checked += 1
        res = space.sub(bracket(i, bracket(j, k)),
                        space.sub(bracket(bracket(i, j), k),
                                  space.scale(sign(space.parity(j), space.parity(k)),
                                              bracket(bracket(i, k), j))))
        if not space.vec_is_zero(res):
            rep.record("right Leibniz",
                       (space.names[i], space.names[j], space.names[k]),
                       space.vec_str(res))
            if fail_fast:
                return rep
    return rep


def check_lie_superalgebra(bracket, fail_fast=False):
    """Lie superalgebra = super skew-symmetry + super Jacobi identity.

    The Jacobi identity is written in its left-normed form
    [x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]], which coincides
    with the left Leibniz shape; together with skew-symmetry this is the usual
    super Jacobi identity.
    """
    rep = AxiomReport("Lie superalgebra axioms")
    check_skew_symmetry(bracket, fail_fast=fail_fast, report=rep)
    if fail_fast and not rep.passed:
        return rep
    check_left_leibniz_superalgebra(bracket, fail_fast=fail_fast, report=rep)
    return rep


def to_left_superalgebra(bracket):
    """Sign-twisted opposite: [x, y]' = -(-1)^{|x||y|} [y, x].

    Sends right Leibniz structures to left Leibniz structures and back.
    """
    space = bracket.space
    out = GradedBilinearMap(space, name=(bracket.name or "bracket") + "_left")
    for i in range(space.dim):
        for j in range(space.dim):
            vec = space.scale(-sign(space.parity(i), space.parity(j)),
                              bracket(j, i))
            if not space.vec_is_zero(vec):
                out.set_entry(i, j, vec)
    return out


def check_supercommutative(product, fail_fast=False):
    """x y = (-1)^{|x||y|} y x on basis pairs."""
    space = product.space
    rep = AxiomReport("supercommutativity")
    for i, j in _basis_pairs(space):
        rep.checked += 1
        res = space.sub(product(i, j),
                        space.scale(sign(space.parity(i), space.parity(j)),
                                    product(j, i)))
        if not space.vec_is_zero(res):
            rep.record("supercommutativity", (space.names[i], space.names[j]),
                       space.vec_str(res))
            if fail_fast:
                return rep
    return rep


def check_associative(product, fail_fast=False):
    """(x y) z = x (y z) on basis triples."""
    space = product.space
    rep = AxiomReport("associativity")
    for i, j, k in _basis_triples(space):
        rep.checked += 1
        res = space.sub(product(product(i, j), k), product(i, product(j, k)))
        if not space.vec_is_zero(res):
            rep.record("associativity",
                       (space.names[i], space.names[j], space.names[k]),
                       space.vec_str(res))
            if fail_fast:
                return rep
    return rep


class LinearMap:
    """A parity-preserving linear operator given on basis vectors."""

    def __init__(self, space, table=None, name=None):
        self.space = space
        self.name = name
        self.table = {}
        if table:
            for i, vec in table.items():
                self.set_entry(i, vec)

    def _idx(self, i):
        return self.space.index(i) if isinstance(i, str) else i

    def set_entry(self, i, vec):
        i = self._idx(i)
        clean = {}
        for k, c in vec.items():
            k = self._idx(k)
            c = Scalar.coerce(c, self.space.params)
            if c.is_zero():
                continue
            if self.space.parity(k) != self.space.parity(i):
                raise ScalarError("linear map is not even: %s -> %s"
                                  % (self.space.names[i], self.space.names[k]))
            clean[k] = c
        if clean:
            self.table[i] = clean
        else:
            self.table.pop(i, None)

    def __call__(self, vec):
        if isinstance(vec, (int, str)):
            vec = self.space.basis_vec(vec)
        out = self.space.zero_vec()
        for i, c in vec.items():
            e = self.table.get(i)
            if e:
                out = self.space.add(out, self.space.scale(c, e))
        return out
