"""The algebra-definition text format.

A file declares one algebra: a graded basis, optional parameters, products
by structure constants, an optional star directive, optional named classical
brackets, an optional explicit lambda-bracket, and optional linear maps.

    algebra rab
    params a, b
    basis L even, W even
    op circ {
        W L -> L;
        W W -> W;
    }
    star = 2*circ
    bracket leib {
        W L -> a L;
        W W -> b L;
    }

Coefficient expressions use rationals (p/q), parameters, parentheses, ^ for
powers and juxtaposition for products; inside lambda-bracket entries the
reserved names d and l stand for the translation generator and the bracket
variable:

    lambda-bracket {
        L L -> (d + 2 l) L;
    }

'#' starts a comment.  parse() and the canonical printer round-trip: parsing
the printed form of a file reproduces it exactly.
"""

import re
from fractions import Fraction

from .scalars import Scalar, ScalarError
from .superspace import SuperSpace, GradedBilinearMap, LinearMap
from .conformal import ConformalError, LambdaBracket, VPoly
from .quadratic import StarMode, star_from_mode, zero_map

RESERVED = ('d', 'l')


class DslError(ValueError):
    pass


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<kwhyph>lambda-bracket|linear-map)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>\d+)
  | (?P<sym>[{}();=+\-*/^,])
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    line = 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DslError("line %d: unexpected character %r"
                           % (line, text[pos]))
        kind = m.lastgroup
        value = m.group()
        if kind not in ('ws', 'comment'):
            tag = {'arrow': 'arrow', 'kwhyph': 'ident', 'ident': 'ident',
                   'int': 'int', 'sym': value}[kind]
            tokens.append((tag, value, line))
        line += value.count("\n")
        pos = m.end()
    tokens.append(('eof', '', line))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.pos]
        if tok[0] != 'eof':
            self.pos += 1
        return tok

    def expect(self, tag, what=None):
        tok = self.next()
        if tok[0] != tag:
            raise DslError("line %d: expected %s, got %r"
                           % (tok[2], what or tag, tok[1] or "end of file"))
        return tok

    def error(self, message, line=None):
        if line is not None:
            raise DslError("line %d: %s" % (line, message))
        tok = self.peek()
        raise DslError("line %d: %s (at %r)"
                       % (tok[2], message, tok[1] or "end of file"))


class AlgebraFile:
    """A parsed algebra definition."""

    def __init__(self, name, space, ops, star_directive, brackets,
                 lambda_bracket, linear_maps):
        self.name = name
        self.space = space
        self.ops = ops                      # name -> GradedBilinearMap
        self.star_directive = star_directive  # None or tuple, see below
        self.brackets = brackets            # name -> GradedBilinearMap
        self.lambda_bracket = lambda_bracket
        self.linear_maps = linear_maps      # name -> LinearMap

    # star_directive is one of
    #   None, ('double', opname), ('symmetrized', opname), ('zero',),
    #   ('explicit', GradedBilinearMap)

    @property
    def params(self):
        return self.space.params

    def circ(self):
        return self.ops.get('circ') or zero_map(self.space, 'circ')

    def star(self):
        """The resolved star product, or None if no star directive."""
        sd = self.star_directive
        if sd is None:
            return None
        if sd[0] == 'zero':
            return zero_map(self.space, 'star')
        if sd[0] == 'double':
            return star_from_mode(self._op(sd[1]), StarMode.DOUBLE)
        if sd[0] == 'symmetrized':
            return star_from_mode(self._op(sd[1]), StarMode.SYMMETRIZED)
        return sd[1]

    def _op(self, name):
        if name not in self.ops:
            raise DslError("star directive refers to unknown op %r" % name)
        return self.ops[name]

    def classical_bracket(self):
        """The first declared bracket (zero if none)."""
        for gbm in self.brackets.values():
            return gbm
        return zero_map(self.space, 'bracket')

    def has_quadratic_data(self):
        return bool(self.ops) or self.star_directive is not None

    def conformal_bracket(self):
        """Bracket source precedence: explicit lambda-bracket, else the
        quadratic dictionary on (circ, star, bracket), else the current
        algebra of the classical bracket."""
        from .quadratic import build_quadratic_bracket
        from .conformal import build_current
        if self.lambda_bracket is not None:
            return self.lambda_bracket
        if self.has_quadratic_data():
            star = self.star()
            if star is None:
                star = zero_map(self.space, 'star')
            return build_quadratic_bracket(self.circ(), star,
                                           self.classical_bracket())
        if self.brackets:
            return build_current(self.classical_bracket())
        raise DslError("algebra %r defines no bracket source" % self.name)

    def substitute(self, assignments):
        """A copy with parameters substituted by rationals."""
        unknown = set(assignments) - set(self.params)
        if unknown:
            raise DslError("unknown parameters: %s" % ", ".join(sorted(unknown)))
        space = self.space.substitute_params(assignments)
        ops = {n: g.substitute_params(assignments) for n, g in self.ops.items()}
        # re-anchor every component on one shared space object
        def reanchor_gbm(g):
            out = GradedBilinearMap(space, name=g.name)
            for (i, j), vec in g.table.items():
                out.set_entry(i, j, vec)
            return out
        ops = {n: reanchor_gbm(g) for n, g in ops.items()}
        sd = self.star_directive
        if sd is not None and sd[0] == 'explicit':
            sd = ('explicit', reanchor_gbm(sd[1].substitute_params(assignments)))
        brackets = {n: reanchor_gbm(g.substitute_params(assignments))
                    for n, g in self.brackets.items()}
        lb = None
        if self.lambda_bracket is not None:
            sub = self.lambda_bracket.substitute_params(assignments)
            lb = LambdaBracket(space, name=sub.name)
            for (i, j), vp in sub.entries.items():
                lb.set_entry(i, j, VPoly(space, dict(vp.terms)))
        lms = {}
        for n, lm in self.linear_maps.items():
            out = LinearMap(space, name=lm.name)
            for i, vec in lm.table.items():
                out.set_entry(i, {k: c.substitute(assignments)
                                  for k, c in vec.items()})
            lms[n] = out
        return AlgebraFile(self.name, space, ops, sd, brackets, lb, lms)

    # ---------- canonical printing ----------

    def canonical_text(self):
        lines = ["algebra %s" % self.name]
        if self.params:
            lines.append("params " + ", ".join(self.params))
        lines.append("basis " + ", ".join(
            "%s %s" % (n, "odd" if p else "even")
            for n, p in zip(self.space.names, self.space.parities)))
        for name, gbm in self.ops.items():
            lines.extend(self._gbm_block("op %s" % name, gbm))
        sd = self.star_directive
        if sd is not None:
            if sd[0] == 'zero':
                lines.append("star = zero")
            elif sd[0] == 'double':
                lines.append("star = 2*%s" % sd[1])
            elif sd[0] == 'symmetrized':
                lines.append("star = symmetrized(%s)" % sd[1])
            else:
                lines.extend(self._gbm_block("star = explicit", sd[1]))
        for name, gbm in self.brackets.items():
            lines.extend(self._gbm_block("bracket %s" % name, gbm))
        if self.lambda_bracket is not None:
            lines.append("lambda-bracket {")
            for (i, j) in sorted(self.lambda_bracket.entries):
                lines.append("    %s %s -> %s;"
                             % (self.space.names[i], self.space.names[j],
                                self.lambda_bracket.entries[(i, j)]))
            lines.append("}")
        for name, lm in self.linear_maps.items():
            lines.append("linear-map %s {" % name)
            for i in sorted(lm.table):
                lines.append("    %s -> %s;"
                             % (self.space.names[i],
                                self.space.vec_str(lm.table[i])))
            lines.append("}")
        return "\n".join(lines) + "\n"

    def _gbm_block(self, header, gbm):
        lines = ["%s {" % header]
        for (i, j) in sorted(gbm.table):
            lines.append("    %s %s -> %s;"
                         % (self.space.names[i], self.space.names[j],
                            self.space.vec_str(gbm.table[(i, j)])))
        lines.append("}")
        return lines

    def __eq__(self, other):
        return (isinstance(other, AlgebraFile)
                and self.canonical_text() == other.canonical_text())


# ---------- expression evaluation ----------
# A value is {key: {(dd, dl): Scalar}} with key None for the scalar part and
# a basis index for each vector part.

def _val_scalar(s, params):
    return {None: {(0, 0): Scalar.coerce(s, params)}}


def _val_add(a, b, params):
    out = {k: dict(v) for k, v in a.items()}
    for k, poly in b.items():
        dst = out.setdefault(k, {})
        for e, c in poly.items():
            total = dst.get(e, Scalar.zero(params)) + c
            if total.is_zero():
                dst.pop(e, None)
            else:
                dst[e] = total
    return {k: v for k, v in out.items() if v}


def _val_scale(a, factor):
    return {k: {e: c * factor for e, c in poly.items()}
            for k, poly in a.items()}


def _val_mul(a, b, params, parser):
    a_vec = any(k is not None for k in a)
    b_vec = any(k is not None for k in b)
    if a_vec and b_vec:
        parser.error("cannot multiply two basis-vector expressions")
    if b_vec:
        a, b = b, a
    # b is pure scalar (possibly with d/l powers)
    out = {}
    for k, poly in a.items():
        dst = out.setdefault(k, {})
        for (pd1, pl1), c1 in poly.items():
            for (pd2, pl2), c2 in b.get(None, {}).items():
                e = (pd1 + pd2, pl1 + pl2)
                total = dst.get(e, Scalar.zero(params)) + c1 * c2
                if total.is_zero():
                    dst.pop(e, None)
                else:
                    dst[e] = total
    return {k: v for k, v in out.items() if v}


class _ExprParser:
    """Parses coefficient-and-vector expressions in a given context."""

    def __init__(self, parser, space, allow_vars):
        self.p = parser
        self.space = space
        self.allow_vars = allow_vars
        self.params = space.params

    def parse(self):
        val = self.parse_term_signed()
        while self.p.peek()[0] in ('+', '-'):
            op = self.p.next()[0]
            rhs = self.parse_term()
            if op == '-':
                rhs = _val_scale(rhs, Scalar.rational(-1, self.params))
            val = _val_add(val, rhs, self.params)
        return val

    def parse_term_signed(self):
        negate = False
        while self.p.peek()[0] in ('+', '-'):
            if self.p.next()[0] == '-':
                negate = not negate
        val = self.parse_term()
        if negate:
            val = _val_scale(val, Scalar.rational(-1, self.params))
        return val

    def parse_term(self):
        val = self.parse_factor()
        while self.p.peek()[0] in ('ident', 'int', '('):
            val = _val_mul(val, self.parse_factor(), self.params, self.p)
        return val

    def parse_factor(self):
        val = self.parse_atom()
        while self.p.peek()[0] == '^':
            self.p.next()
            n = int(self.p.expect('int', "an integer power")[1])
            if any(k is not None for k in val) and n != 1:
                self.p.error("cannot raise a basis-vector expression to a power")
            out = _val_scalar(1, self.params)
            for _ in range(n):
                out = _val_mul(out, val, self.params, self.p)
            val = out
        return val

    def parse_atom(self):
        tag, text, line = self.p.peek()
        if tag == 'int':
            self.p.next()
            num = int(text)
            den = 1
            if self.p.peek()[0] == '/':
                self.p.next()
                den = int(self.p.expect('int', "a denominator")[1])
                if den == 0:
                    self.p.error("zero denominator")
            return _val_scalar(Fraction(num, den), self.params)
        if tag == '(':
            self.p.next()
            val = self.parse()
            self.p.expect(')')
            return val
        if tag == 'ident':
            self.p.next()
            if text in RESERVED:
                if not self.allow_vars:
                    self.p.error("%r is only allowed in lambda-bracket "
                                 "entries" % text)
                e = (1, 0) if text == 'd' else (0, 1)
                return {None: {e: Scalar.one(self.params)}}
            if text in self.params:
                return {None: {(0, 0): Scalar.param(text, self.params)}}
            if text in self.space.names:
                return {self.space.index(text): {(0, 0): Scalar.one(self.params)}}
            self.p.error("unknown name %r" % text)
        self.p.error("expected an expression")

    def as_vector(self):
        """Parse and require a classical vector (no d/l, no scalar part)."""
        val = self.parse()
        if None in val:
            self.p.error("entry must be a linear combination of basis vectors")
        vec = {}
        for k, poly in val.items():
            for (dd, dl), c in poly.items():
                if dd or dl:
                    self.p.error("d and l are not allowed here")
                vec[k] = c
        return vec

    def as_vpoly(self):
        """Parse and require a d/l-polynomial combination of basis vectors."""
        val = self.parse()
        if None in val:
            self.p.error("entry must be a linear combination of basis vectors")
        terms = {}
        for k, poly in val.items():
            for (dd, dl), c in poly.items():
                terms[(k, dd, dl, 0, 0)] = c
        return terms


# ---------- the file parser ----------

def parse(text):
    """Parse an algebra definition; returns an AlgebraFile."""
    p = _Parser(text)
    tok = p.expect('ident', "'algebra'")
    if tok[1] != 'algebra':
        raise DslError("line %d: a file starts with 'algebra <name>'" % tok[2])
    name = p.expect('ident', "an algebra name")[1]

    params = []
    basis = []
    # optional params/basis come before anything that needs the space
    while True:
        tag, text_, line = p.peek()
        if tag == 'ident' and text_ == 'params':
            p.next()
            while p.peek()[0] == 'ident' and p.peek()[1] not in (
                    'basis', 'op', 'star', 'bracket', 'lambda-bracket',
                    'linear-map', 'params'):
                ptok = p.next()
                pname = ptok[1]
                if pname in RESERVED:
                    p.error("%r is reserved" % pname, line=ptok[2])
                if pname in params:
                    p.error("duplicate parameter %r" % pname, line=ptok[2])
                params.append(pname)
                if p.peek()[0] == ',':
                    p.next()
        elif tag == 'ident' and text_ == 'basis':
            p.next()
            while True:
                btok = p.expect('ident', "a basis name")
                bname = btok[1]
                if bname in RESERVED:
                    p.error("%r is reserved" % bname, line=btok[2])
                if any(bname == existing for existing, _ in basis):
                    p.error("duplicate basis vector %r" % bname, line=btok[2])
                parity_tok = p.expect('ident', "'even' or 'odd'")[1]
                if parity_tok not in ('even', 'odd'):
                    p.error("expected 'even' or 'odd'")
                basis.append((bname, 1 if parity_tok == 'odd' else 0))
                if p.peek()[0] == ',':
                    p.next()
                    continue
                break
        else:
            break

    if not basis:
        p.error("no basis declared")
    for bname, _ in basis:
        if bname in params:
            p.error("name %r is both a parameter and a basis vector" % bname)
    space = SuperSpace(basis, params=tuple(params))

    ops = {}
    star_directive = None
    brackets = {}
    lambda_bracket = None
    linear_maps = {}

    def parse_gbm_block(gname):
        gbm = GradedBilinearMap(space, name=gname)
        p.expect('{')
        while p.peek()[0] != '}':
            itok = p.expect('ident', "a basis name")
            i = itok[1]
            j = p.expect('ident', "a basis name")[1]
            if i not in space.names or j not in space.names:
                p.error("unknown basis name")
            p.expect('arrow', "'->'")
            vec = _ExprParser(p, space, allow_vars=False).as_vector()
            p.expect(';')
            if vec:
                prev = gbm.entry(i, j)
                if prev:
                    p.error("duplicate entry (%s, %s)" % (i, j))
                try:
                    gbm.set_entry(i, j, vec)
                except ScalarError as exc:
                    p.error(str(exc), line=itok[2])
        p.expect('}')
        return gbm

    while p.peek()[0] != 'eof':
        tag, text_, line = p.next()
        if tag != 'ident':
            raise DslError("line %d: unexpected %r" % (line, text_))
        if text_ == 'op':
            oname = p.expect('ident', "an op name")[1]
            if oname == 'star':
                p.error("define star with the 'star = ...' directive")
            if oname in ops:
                p.error("duplicate op %r" % oname)
            ops[oname] = parse_gbm_block(oname)
        elif text_ == 'star':
            if star_directive is not None:
                p.error("duplicate star directive")
            p.expect('=')
            tag2, text2, _ = p.peek()
            if tag2 == 'int' and text2 == '2':
                p.next()
                p.expect('*')
                base = p.expect('ident', "an op name")[1]
                star_directive = ('double', base)
            elif tag2 == 'ident' and text2 == 'symmetrized':
                p.next()
                p.expect('(')
                base = p.expect('ident', "an op name")[1]
                p.expect(')')
                star_directive = ('symmetrized', base)
            elif tag2 == 'ident' and text2 == 'zero':
                p.next()
                star_directive = ('zero',)
            elif tag2 == 'ident' and text2 == 'explicit':
                p.next()
                star_directive = ('explicit', parse_gbm_block('star'))
            else:
                p.error("expected 2*<op>, symmetrized(<op>), zero or "
                        "explicit {...}")
        elif text_ == 'bracket':
            bname = p.expect('ident', "a bracket name")[1]
            if bname in brackets:
                p.error("duplicate bracket %r" % bname)
            brackets[bname] = parse_gbm_block(bname)
        elif text_ == 'lambda-bracket':
            if lambda_bracket is not None:
                p.error("duplicate lambda-bracket")
            lambda_bracket = LambdaBracket(space, name='lambda')
            p.expect('{')
            while p.peek()[0] != '}':
                itok = p.expect('ident', "a basis name")
                i = itok[1]
                j = p.expect('ident', "a basis name")[1]
                if i not in space.names or j not in space.names:
                    p.error("unknown basis name")
                p.expect('arrow', "'->'")
                terms = _ExprParser(p, space, allow_vars=True).as_vpoly()
                p.expect(';')
                if terms:
                    if lambda_bracket.entries.get(
                            (space.index(i), space.index(j))):
                        p.error("duplicate entry (%s, %s)" % (i, j))
                    try:
                        lambda_bracket.set_entry(i, j, VPoly(space, terms))
                    except (ScalarError, ConformalError) as exc:
                        p.error(str(exc), line=itok[2])
            p.expect('}')
        elif text_ == 'linear-map':
            mname = p.expect('ident', "a map name")[1]
            if mname in linear_maps:
                p.error("duplicate linear-map %r" % mname)
            lm = LinearMap(space, name=mname)
            p.expect('{')
            while p.peek()[0] != '}':
                itok = p.expect('ident', "a basis name")
                i = itok[1]
                if i not in space.names:
                    p.error("unknown basis name")
                p.expect('arrow', "'->'")
                vec = _ExprParser(p, space, allow_vars=False).as_vector()
                p.expect(';')
                if space.index(i) in lm.table:
                    p.error("duplicate entry %s" % i)
                if vec:
                    try:
                        lm.set_entry(i, vec)
                    except ScalarError as exc:
                        p.error(str(exc), line=itok[2])
            p.expect('}')
            linear_maps[mname] = lm
        else:
            raise DslError("line %d: unknown declaration %r" % (line, text_))

    if star_directive is not None and star_directive[0] in ('double',
                                                            'symmetrized'):
        if star_directive[1] not in ops:
            raise DslError("star directive refers to undeclared op %r"
                           % star_directive[1])

    return AlgebraFile(name, space, ops, star_directive, brackets,
                       lambda_bracket, linear_maps)


def parse_file(path):
    with open(path) as fh:
        return parse(fh.read())
