"""Exact linear algebra over Q (Fraction entries), done sparsely.

Rows are dicts mapping column index -> Fraction; a missing key is 0.  The
row-reduced echelon form is unique, so every routine here is deterministic
no matter what order rows arrive in.
"""

from fractions import Fraction


def _clean(row):
    out = {}
    for col, val in row.items():
        if not isinstance(val, Fraction):
            val = Fraction(val)
        if val != 0:
            out[col] = val
    return out


def rref(rows):
    """Reduce a collection of sparse rows to RREF.

    Returns (pivot_cols, reduced) where pivot_cols is the sorted list of
    pivot columns and reduced maps each pivot column to its (fully reduced,
    leading-1) row.
    """
    reduced = {}  # pivot col -> row dict
    for row in rows:
        row = _clean(row)
        # eliminate against existing pivots
        for pcol in sorted(reduced):
            if pcol in row:
                factor = row[pcol]
                prow = reduced[pcol]
                for col, val in prow.items():
                    row[col] = row.get(col, Fraction(0)) - factor * val
                    if row[col] == 0:
                        del row[col]
        if not row:
            continue
        pivot = min(row)
        inv = 1 / row[pivot]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute into the rows we already have
        for pcol, prow in reduced.items():
            if pivot in prow:
                factor = prow[pivot]
                for col, val in row.items():
                    prow[col] = prow.get(col, Fraction(0)) - factor * val
                    if prow[col] == 0:
                        del prow[col]
        reduced[pivot] = row
    return sorted(reduced), reduced


def rank(rows):
    pivots, _ = rref(rows)
    return len(pivots)


def nullspace(rows, ncols):
    """Standard nullspace basis of the homogeneous system rows * x = 0.

    One basis vector per free column, in increasing free-column order: the
    vector has 1 in its free column, 0 in the other free columns, and the
    negated reduced-row entries in the pivot columns.  Vectors are returned
    as tuples of Fractions of length ncols.
    """
    pivots, reduced = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for pcol in pivots:
            entry = reduced[pcol].get(free)
            if entry is not None:
                vec[pcol] = -entry
        basis.append(tuple(vec))
    return basis


def span_basis(vectors, ncols):
    """Canonical (RREF) basis of the span of the given vectors.

    Two lists of vectors span the same subspace iff this returns the same
    list for both.  Vectors come in as sequences or sparse dicts; the result
    is a list of length-ncols Fraction tuples sorted by pivot column.
    """
    rows = []
    for vec in vectors:
        if isinstance(vec, dict):
            rows.append(vec)
        else:
            rows.append({i: v for i, v in enumerate(vec)})
    pivots, reduced = rref(rows)
    out = []
    for pcol in pivots:
        row = reduced[pcol]
        out.append(tuple(row.get(i, Fraction(0)) for i in range(ncols)))
    return out


def same_span(vectors_a, vectors_b, ncols):
    return span_basis(vectors_a, ncols) == span_basis(vectors_b, ncols)


def in_span(vector, vectors, ncols):
    """Is `vector` in the span of `vectors`?"""
    base = span_basis(vectors, ncols)
    joined = span_basis(list(base) + [tuple(vector)], ncols)
    return joined == base
