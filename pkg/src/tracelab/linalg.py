"""Exact dense linear algebra over Q and the prime fields F_2, F_3, F_5.

Every higher-level equality in this package (equality of submodules, traces,
torsion subspaces, ...) reduces to structural equality of canonical subspace
bases computed here, so all arithmetic is exact.  Over Q scalars are
arbitrary-precision rationals (gmpy2.mpq when installed, fractions.Fraction
otherwise); over F_p they are residues with table-driven inverses.

Matrices are dense and immutable.  Subspaces are stored via a basis in
reduced column echelon form; that form is unique per subspace, so structural
equality of Subspace values decides equality of subspaces.
"""

from __future__ import annotations

import itertools

from .errors import DimensionMismatch, FieldNotFinite

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _rat

SUPPORTED_PRIMES = (2, 3, 5)

_INVERSE_TABLE = {
    2: (0, 1),
    3: (0, 1, 2),
    5: (0, 1, 3, 2, 4),
}


class FpValue:
    """A residue in F_p for a small prime p.

    Values are immutable and only interact with residues of the same p.
    Truthiness means "nonzero", which is what the elimination loops test.
    """

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def __add__(self, other):
        if not isinstance(other, FpValue):
            return NotImplemented
        return FpValue(self.p, self.v + other.v)

    def __sub__(self, other):
        if not isinstance(other, FpValue):
            return NotImplemented
        return FpValue(self.p, self.v - other.v)

    def __mul__(self, other):
        if not isinstance(other, FpValue):
            return NotImplemented
        return FpValue(self.p, self.v * other.v)

    def __truediv__(self, other):
        if not isinstance(other, FpValue):
            return NotImplemented
        if other.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpValue(self.p, self.v * _INVERSE_TABLE[self.p][other.v])

    def __neg__(self):
        return FpValue(self.p, -self.v)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpValue):
            return self.p == other.p and self.v == other.v
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return "%d" % self.v


class RationalField:
    """The field Q with exact arbitrary-precision rational scalars."""

    char = 0
    order = None
    name = "Q"
    is_finite = False

    def __init__(self):
        self.zero = _rat(0)
        self.one = _rat(1)

    def from_int(self, n):
        return _rat(n)

    def parse(self, text):
        """Parse "p/q" or "p" into an exact rational."""
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return _rat(int(num), int(den))
        return _rat(int(text))

    def format(self, x):
        """Render a scalar as "p" or "p/q" with den > 0 and gcd(p, q) = 1."""
        n, d = x.numerator, x.denominator
        return "%d" % n if d == 1 else "%d/%d" % (n, d)

    def to_json(self, x):
        return self.format(x)

    def sort_key(self, x):
        return (x.numerator, x.denominator)

    def elements(self):
        raise FieldNotFinite("Q has infinitely many elements")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The prime field F_p for p in {2, 3, 5}."""

    is_finite = True

    def __init__(self, p):
        if p not in SUPPORTED_PRIMES:
            raise ValueError("supported primes are %s, got %r" % (SUPPORTED_PRIMES, p))
        self.char = p
        self.order = p
        self.name = "F%d" % p
        self._elements = tuple(FpValue(p, i) for i in range(p))
        self.zero = self._elements[0]
        self.one = self._elements[1]

    def from_int(self, n):
        return self._elements[n % self.char]

    def parse(self, text):
        return self.from_int(int(text.strip()))

    def format(self, x):
        return "%d" % x.v

    def to_json(self, x):
        return x.v

    def sort_key(self, x):
        return (x.v, 1)

    def elements(self):
        return self._elements

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("F", self.char))

    def __repr__(self):
        return self.name


QQ = RationalField()
_GF_CACHE = {p: PrimeField(p) for p in SUPPORTED_PRIMES}


def GF(p):
    """Return the shared PrimeField instance for p in {2, 3, 5}."""
    try:
        return _GF_CACHE[p]
    except KeyError:
        raise ValueError("supported primes are %s, got %r" % (SUPPORTED_PRIMES, p)) from None


FIELDS = {"Q": QQ, "F2": GF(2), "F3": GF(3), "F5": GF(5)}


class Matrix:
    """An immutable dense matrix over a fixed field.

    Entries are stored row-major as a tuple of row tuples; `entries length
    = rows * cols` holds by construction.  Matrices hash and compare by
    value (field included), so canonical forms can be deduplicated.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise DimensionMismatch("ragged rows in matrix literal")
        elif ncols is None:
            ncols = 0
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_cols(cls, field, cols, nrows=None):
        """Build a matrix from a sequence of column vectors."""
        cols = [tuple(c) for c in cols]
        if cols:
            if nrows is None:
                nrows = len(cols[0])
            for c in cols:
                if len(c) != nrows:
                    raise DimensionMismatch("ragged columns")
            if nrows == 0:
                return cls(field, [], ncols=len(cols))
            return cls(field, [[c[i] for c in cols] for i in range(nrows)])
        if nrows is None:
            nrows = 0
        return cls(field, [[] for _ in range(nrows)], ncols=0)

    @classmethod
    def from_int_rows(cls, field, rows, ncols=None):
        conv = field.from_int
        return cls(field, [[conv(x) for x in r] for r in rows], ncols=ncols)

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], ncols=self.nrows)

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows], ncols=self.ncols)

    def scale(self, s):
        return Matrix(self.field, [[s * a for a in r] for r in self.rows], ncols=self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                "cannot multiply %dx%d by %dx%d" % (self.nrows, self.ncols, other.nrows, other.ncols)
            )
        field = self.field
        if isinstance(field, PrimeField) and self.nrows * other.ncols > 16:
            return self._matmul_mod(other)
        zero = field.zero
        orows = other.rows
        out = []
        for arow in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = orows[k]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(field, out, ncols=other.ncols)

    def _matmul_mod(self, other):
        p = self.field.char
        conv = self.field._elements
        brows = [[x.v for x in r] for r in other.rows]
        out = []
        for arow in self.rows:
            acc = [0] * other.ncols
            for k, a in enumerate(arow):
                av = a.v
                if not av:
                    continue
                brow = brows[k]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += av * b
            out.append([conv[x % p] for x in acc])
        return Matrix(self.field, out, ncols=other.ncols)

    def apply(self, vec):
        """Matrix-vector product; vec is a length-ncols sequence."""
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length %d != %d columns" % (len(vec), self.ncols))
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, x in zip(row, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def kron(self, other):
        """Kronecker product, shape (nrows*other.nrows) x (ncols*other.ncols)."""
        field = self.field
        out = []
        for arow in self.rows:
            for brow in other.rows:
                row = []
                for a in arow:
                    if a:
                        row.extend(a * b for b in brow)
                    else:
                        row.extend([field.zero] * other.ncols)
                out.append(row)
        return Matrix(field, out, ncols=self.ncols * other.ncols)

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def to_lists(self):
        return [list(r) for r in self.rows]

    def _check_same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return "Matrix(%s, %dx%d, [%s])" % (self.field, self.nrows, self.ncols, body)


def hstack(matrices):
    matrices = list(matrices)
    if not matrices:
        raise ValueError("hstack of nothing")
    nrows = matrices[0].nrows
    for m in matrices:
        if m.nrows != nrows:
            raise DimensionMismatch("hstack row counts differ")
    rows = [tuple(itertools.chain.from_iterable(m.rows[i] for m in matrices)) for i in range(nrows)]
    return Matrix(matrices[0].field, rows, ncols=sum(m.ncols for m in matrices))


def vstack(matrices):
    matrices = list(matrices)
    if not matrices:
        raise ValueError("vstack of nothing")
    ncols = matrices[0].ncols
    for m in matrices:
        if m.ncols != ncols:
            raise DimensionMismatch("vstack column counts differ")
    rows = []
    for m in matrices:
        rows.extend(m.rows)
    return Matrix(matrices[0].field, rows, ncols=ncols)


def kron(a, b):
    """Kronecker product of two matrices over the same field."""
    return a.kron(b)


# -- row reduction cores -----------------------------------------------------
#
# _row_reduce returns (reduced row lists, pivot column list).  The first
# len(pivots) rows are the nonzero rows of the reduced echelon form; any
# remaining rows are zero in the first `pivot_limit` columns (they can be
# nonzero beyond it, which is exactly what solve() needs for its
# consistency test).


def _row_reduce_generic(rows, ncols, one, pivot_limit):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(pivot_limit):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        piv = prow[c]
        if piv != one:
            inv = one / piv
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            for j in range(c, ncols):
                v = prow[j]
                if v:
                    row[j] = row[j] - f * v
        pivots.append(c)
        r += 1
    return rows, pivots


def _row_reduce_mod(rows, ncols, p, pivot_limit):
    inv = _INVERSE_TABLE[p]
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(pivot_limit):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        piv = prow[c]
        if piv != 1:
            iv = inv[piv]
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * iv % p
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            for j in range(c, ncols):
                v = prow[j]
                if v:
                    row[j] = (row[j] - f * v) % p
        pivots.append(c)
        r += 1
    return rows, pivots


def _row_reduce(field, rows, ncols, pivot_limit=None):
    if pivot_limit is None:
        pivot_limit = ncols
    if isinstance(field, PrimeField):
        int_rows = [[x.v for x in r] for r in rows]
        red, pivots = _row_reduce_mod(int_rows, ncols, field.char, pivot_limit)
        conv = field._elements
        return [[conv[x] for x in r] for r in red], pivots
    return _row_reduce_generic(rows, ncols, field.one, pivot_limit)


def reduce(m):
    """Unique reduced row echelon form of a matrix; rank = pivot count."""
    red, _ = _row_reduce(m.field, m.rows, m.ncols)
    return Matrix(m.field, red, ncols=m.ncols)


def rank(m):
    _, pivots = _row_reduce(m.field, m.rows, m.ncols)
    return len(pivots)


def solve(m, rhs):
    """An exact solution x of m @ x = rhs, or None when none exists.

    rhs may have several columns; all are solved simultaneously.  Free
    variables are set to zero, so each solution column is supported on the
    pivot columns of m ("pivot-first" convention).
    """
    if m.nrows != rhs.nrows:
        raise DimensionMismatch("rhs has %d rows, matrix has %d" % (rhs.nrows, m.nrows))
    field = m.field
    aug = [list(r) + list(s) for r, s in zip(m.rows, rhs.rows)]
    if not aug:
        return Matrix.zeros(field, m.ncols, rhs.ncols)
    red, pivots = _row_reduce(field, aug, m.ncols + rhs.ncols, pivot_limit=m.ncols)
    for i in range(len(pivots), len(red)):
        if any(red[i][m.ncols:]):
            return None
    zero = field.zero
    out = [[zero] * rhs.ncols for _ in range(m.ncols)]
    for i, c in enumerate(pivots):
        out[c] = red[i][m.ncols:]
    return Matrix(field, out, ncols=rhs.ncols)


class Subspace:
    """A linear subspace of k^n held as a canonical reduced basis.

    The basis matrix is n x dim with columns in reduced column echelon form
    (pivot rows strictly increasing, pivot entries 1, pivot rows zero in the
    other columns).  That form is unique, so `a == b` iff the subspaces are
    equal; this is the equality every submodule comparison bottoms out in.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        """Canonical subspace spanned by the given length-n vectors."""
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector length %d != ambient %d" % (len(v), ambient_dim))
        red, pivots = _row_reduce(field, vectors, ambient_dim)
        basis_rows = red[: len(pivots)]
        basis = Matrix(field, basis_rows, ncols=ambient_dim).transpose()
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls.from_vectors(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(
            field, ambient_dim, Matrix.identity(field, ambient_dim), range(ambient_dim)
        )

    @property
    def dim(self):
        return len(self.pivots)

    def basis_columns(self):
        return [self.basis.col(j) for j in range(self.dim)]

    def coords_of(self, vec):
        """Coordinates of vec in the canonical basis, or None if outside.

        With a reduced column echelon basis the candidate coordinates are
        just the entries of vec at the pivot rows; membership is decided by
        exact reconstruction (equivalent to the residual rank test).
        """
        vec = tuple(vec)
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector length %d != ambient %d" % (len(vec), self.ambient_dim))
        coords = tuple(vec[p] for p in self.pivots)
        if self.basis.apply(coords) != vec:
            return None
        return coords

    def contains_vector(self, vec):
        return self.coords_of(vec) is not None

    def contains(self, other):
        """Whether other is a subspace of self (same ambient space)."""
        self._check_ambient(other)
        return all(self.contains_vector(c) for c in other.basis_columns())

    def sum(self, other):
        self._check_ambient(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim, self.basis_columns() + other.basis_columns()
        )

    def intersect(self, other):
        """Intersection via the kernel of [A | B]."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = hstack([self.basis, other.basis])
        ker = kernel(stacked)
        vecs = []
        for col in ker.basis_columns():
            vecs.append(self.basis.apply(col[: self.dim]))
        return Subspace.from_vectors(self.field, self.ambient_dim, vecs)

    def quotient_maps(self):
        """(proj, section) matrices realizing k^n -> k^n / self.

        proj is (n-dim) x n, section is n x (n-dim); proj @ section is the
        identity and proj kills the subspace.  The section lifts quotient
        basis vectors to the ambient standard basis vectors at non-pivot
        rows.
        """
        field = self.field
        n = self.ambient_dim
        pivset = set(self.pivots)
        nonpivots = [q for q in range(n) if q not in pivset]
        z, o = field.zero, field.one
        proj = []
        for q in nonpivots:
            row = [z] * n
            row[q] = o
            for i, p in enumerate(self.pivots):
                b = self.basis.rows[q][i]
                if b:
                    row[p] = -b
            proj.append(row)
        section_rows = [[z] * len(nonpivots) for _ in range(n)]
        for t, q in enumerate(nonpivots):
            section_rows[q][t] = o
        return (
            Matrix(field, proj, ncols=n),
            Matrix(field, section_rows, ncols=len(nonpivots)),
        )

    def vectors(self):
        """All vectors of the subspace; finite fields only (p^dim many)."""
        if not self.field.is_finite:
            raise FieldNotFinite("cannot enumerate a subspace over %s" % self.field.name)
        cols = self.basis_columns()
        zero_vec = tuple([self.field.zero] * self.ambient_dim)
        if not cols:
            yield zero_vec
            return
        for coeffs in itertools.product(self.field.elements(), repeat=len(cols)):
            acc = list(zero_vec)
            for c, col in zip(coeffs, cols):
                if c:
                    for i, x in enumerate(col):
                        if x:
                            acc[i] = acc[i] + c * x
            yield tuple(acc)

    def sort_key(self):
        """Deterministic total order key: (dim, flattened basis entries)."""
        sk = self.field.sort_key
        return (self.dim, tuple(sk(x) for row in self.basis.rows for x in row))

    def _check_ambient(self, other):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatch(
                "subspaces of different ambient spaces (%d vs %d)"
                % (self.ambient_dim, other.ambient_dim)
            )

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of k^%d)" % (self.dim, self.ambient_dim)


def kernel(m):
    """The solution space {v : m @ v = 0} as a canonical Subspace."""
    field = m.field
    red, pivots = _row_reduce(field, m.rows, m.ncols)
    pivset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivset]
    z, o = field.zero, field.one
    vecs = []
    for f in free:
        v = [z] * m.ncols
        v[f] = o
        for i, p in enumerate(pivots):
            x = red[i][f]
            if x:
                v[p] = -x
        vecs.append(v)
    return Subspace.from_vectors(field, m.ncols, vecs)


def column_space(m):
    """The span of the columns of m as a canonical Subspace."""
    return Subspace.from_vectors(m.field, m.nrows, m.cols())
