"""Matrices over Q[x] / Q(i)[x] plus the scalar linear algebra the pipeline
leans on: Bareiss determinants, adjugates, Faddeev-LeVerrier charpoly,
column Hermite normal form, Sylvester resultants, kernels.
"""

from __future__ import annotations

from fractions import Fraction

from .gauss import FIELD_Q, FIELD_QI, GaussRational, scalar_is_zero, scalar_one, scalar_zero
from .poly import BiPoly, UniPoly, _join_field


def _as_poly(e, field, var):
    if isinstance(e, UniPoly):
        return e.to_field(field)
    return UniPoly.const(e, field, var)


class PolyMatrix:
    __slots__ = ("rows", "field", "nrows", "ncols", "var")

    def __init__(self, rows, field=None, var="x"):
        rs = [list(r) for r in rows]
        if field is None:
            field = FIELD_Q
            for r in rs:
                for e in r:
                    if isinstance(e, UniPoly) and e.field == FIELD_QI:
                        field = FIELD_QI
                    elif isinstance(e, GaussRational) and not e.is_rational():
                        field = FIELD_QI
        rs = tuple(tuple(_as_poly(e, field, var) for e in r) for r in rs)
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", len(rs[0]) if rs else 0)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, n, field=FIELD_Q, var="x"):
        one = UniPoly.one(field, var)
        zero = UniPoly.zero(field, var)
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)], field, var
        )

    @classmethod
    def zeros(cls, n, m, field=FIELD_Q, var="x"):
        zero = UniPoly.zero(field, var)
        return cls([[zero] * m for _ in range(n)], field, var)

    def __getitem__(self, i):
        return self.rows[i]

    def to_lists(self):
        return [list(r) for r in self.rows]

    def to_field(self, field):
        if field == self.field:
            return self
        return PolyMatrix(self.rows, field, self.var)

    def is_square(self):
        return self.nrows == self.ncols

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        f = _join_field(self.field, other.field)
        return self.to_field(f).rows == other.to_field(f).rows

    def __hash__(self):
        return hash((self.rows, self.field))

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return PolyMatrix(
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.ncols)]
                for i in range(self.nrows)
            ],
            None,
            self.var,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyMatrix([[-e for e in r] for r in self.rows], self.field, self.var)

    def __mul__(self, s):
        if isinstance(s, PolyMatrix):
            return self.__matmul__(s)
        return PolyMatrix([[e * s for e in r] for r in self.rows], None, self.var)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        f = _join_field(self.field, other.field)
        a, b = self.to_field(f), other.to_field(f)
        out = []
        for i in range(a.nrows):
            row = []
            for j in range(b.ncols):
                acc = UniPoly.zero(f, self.var)
                for k in range(a.ncols):
                    acc = acc + a.rows[i][k] * b.rows[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, f, self.var)

    def transpose(self):
        return PolyMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.field,
            self.var,
        )

    def conj(self):
        return PolyMatrix([[e.conj() for e in r] for r in self.rows], self.field, self.var)

    def conj_transpose(self):
        return self.transpose().conj()

    def is_symmetric(self):
        return self.is_square() and self == self.transpose()

    def is_hermitian(self):
        return self.is_square() and self == self.conj_transpose()

    def is_rational(self):
        return all(e.is_rational() for r in self.rows for e in r)

    def rational_part(self):
        return PolyMatrix(
            [[e.rational_part() for e in r] for r in self.rows], FIELD_Q, self.var
        )

    def map(self, fn):
        return PolyMatrix([[fn(e) for e in r] for r in self.rows], None, self.var)

    def trace(self):
        acc = UniPoly.zero(self.field, self.var)
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix(
            [[self.rows[i][j] for j in col_idx] for i in row_idx], self.field, self.var
        )

    def evaluate_x(self, a):
        """Scalar matrix (tuple of tuples) at x = a."""
        return tuple(tuple(e.evaluate(a) for e in r) for r in self.rows)

    def max_deg(self):
        return max((e.degree for r in self.rows for e in r), default=-1)

    def det(self) -> UniPoly:
        """Fraction-free Bareiss; exact over the polynomial ring."""
        if not self.is_square():
            raise ValueError("det of non-square matrix")
        n = self.nrows
        if n == 0:
            return UniPoly.one(self.field, self.var)
        a = self.to_lists()
        sign = 1
        prev = UniPoly.one(self.field, self.var)
        for k in range(n - 1):
            if a[k][k].is_zero():
                for i in range(k + 1, n):
                    if not a[i][k].is_zero():
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return UniPoly.zero(self.field, self.var)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
                a[i][k] = UniPoly.zero(self.field, self.var)
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def minor_det(self, i, j) -> UniPoly:
        idx_r = [r for r in range(self.nrows) if r != i]
        idx_c = [c for c in range(self.ncols) if c != j]
        return self.submatrix(idx_r, idx_c).det()

    def adjugate(self) -> "PolyMatrix":
        """adj(M) with M @ adj(M) = det(M) * I."""
        if not self.is_square():
            raise ValueError("adjugate of non-square matrix")
        n = self.nrows
        if n == 0:
            return self
        if n == 1:
            return PolyMatrix([[UniPoly.one(self.field, self.var)]], self.field, self.var)
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                m = self.minor_det(j, i)
                out[i][j] = -m if (i + j) % 2 else m
        return PolyMatrix(out, self.field, self.var)

    def charpoly_t(self) -> BiPoly:
        """det(t*I - M) by Faddeev-LeVerrier; integer divisions only."""
        if not self.is_square():
            raise ValueError("charpoly of non-square matrix")
        n = self.nrows
        cs = [None] * (n + 1)
        cs[n] = UniPoly.one(self.field, self.var)
        N = self
        c = UniPoly.zero(self.field, self.var)
        for k in range(1, n + 1):
            if k > 1:
                N = self @ (N + c * PolyMatrix.identity(n, self.field, self.var))
            c = N.trace() * Fraction(-1, k)
            cs[n - k] = c
        return BiPoly(cs)

    def __repr__(self):
        from .grammar import format_unipoly

        body = "; ".join(
            ", ".join(format_unipoly(e) for e in r) for r in self.rows
        )
        return f"PolyMatrix[{body}]"


# -- Sylvester resultant ----------------------------------------------------


def resultant_t(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_t(f, g): determinant of the Sylvester matrix with the f-coefficient
    rows on top, coefficients listed from leading down."""
    field = _join_field(f.field, g.field)
    if f.is_zero() or g.is_zero():
        return UniPoly.zero(field)
    m, n = f.degree_t, g.degree_t
    if m == 0 and n == 0:
        return UniPoly.one(field)
    if m == 0:
        return f.coeff(0).to_field(field) ** n
    if n == 0:
        return g.coeff(0).to_field(field) ** m
    size = m + n
    zero = UniPoly.zero(field)
    fdesc = [f.coeff(m - k).to_field(field) for k in range(m + 1)]
    gdesc = [g.coeff(n - k).to_field(field) for k in range(n + 1)]
    rows = []
    for i in range(n):
        rows.append([zero] * i + fdesc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gdesc + [zero] * (size - n - 1 - i))
    return PolyMatrix(rows, field).det()


def disc_t(f: BiPoly) -> UniPoly:
    """Res_t(f, df/dt); for monic f its roots are exactly the branch points."""
    return resultant_t(f, f.partial_t())


# -- column Hermite normal form over F[x] ------------------------------------


def _last_nonzero(col):
    for i in range(len(col) - 1, -1, -1):
        if not col[i].is_zero():
            return i
    return -1


def hnf_columns(cols, n):
    """Canonical upper-triangular basis of the F[x]-column span.

    Returns n columns, column j supported on rows 0..j, monic diagonal,
    entries right of the diagonal reduced below its degree.  Raises
    ValueError when the span has rank < n.
    """
    if not cols:
        raise ValueError("no generators")
    field = FIELD_Q
    for c in cols:
        for e in c:
            if e.field == FIELD_QI:
                field = FIELD_QI
    pool = [[e.to_field(field) for e in c] for c in cols]
    pivots = {}
    while pool:
        c = pool.pop()
        r = _last_nonzero(c)
        if r < 0:
            continue
        while r in pivots:
            p = pivots[r]
            if c[r].degree >= p[r].degree:
                q = c[r] // p[r]
                c = [c[i] - q * p[i] for i in range(n)]
            else:
                pivots[r] = c
                c = p
            r = _last_nonzero(c)
            if r < 0:
                break
        if r >= 0:
            pivots[r] = c
    if sorted(pivots) != list(range(n)):
        raise ValueError(f"rank deficient: pivot rows {sorted(pivots)} of {n}")
    basis = []
    for j in range(n):
        col = pivots[j]
        lc = col[j].lc()
        inv = scalar_one(field) / lc
        basis.append([e * inv for e in col])
    # reduce above-diagonal entries
    for j in range(n):
        for i in range(j - 1, -1, -1):
            q = basis[j][i] // basis[i][i]
            if not q.is_zero():
                basis[j] = [basis[j][k] - q * basis[i][k] for k in range(n)]
    return basis


def hnf_reduce(columns, n) -> PolyMatrix:
    """hnf_columns packaged as an upper-triangular basis matrix (column j of
    the result is the j-th canonical basis vector)."""
    basis = hnf_columns(columns, n)
    return PolyMatrix([[basis[j][i] for j in range(n)] for i in range(n)])


def solve_upper(basis, v):
    """Solve B y = v for polynomial y, with B the hnf_columns basis (column j
    supported on rows 0..j).  None when v is outside the column span."""
    n = len(basis)
    v = list(v)
    y = [None] * n
    for j in range(n - 1, -1, -1):
        q, r = v[j].divmod(basis[j][j])
        if not r.is_zero():
            return None
        y[j] = q
        for i in range(j + 1):
            v[i] = v[i] - q * basis[j][i]
    if any(not e.is_zero() for e in v):
        return None
    return y


# -- scalar linear algebra ----------------------------------------------------


def scalar_det(rows):
    """Determinant of a scalar matrix (Fraction / GaussRational entries)."""
    n = len(rows)
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("non-square")
    det = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not scalar_is_zero(a[i][k]):
                piv = i
                break
        if piv is None:
            return a[0][0] * 0 if n else Fraction(1)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k]
        inv_ = a[k][k]
        for i in range(k + 1, n):
            if not scalar_is_zero(a[i][k]):
                m = a[i][k] / inv_
                for j in range(k, n):
                    a[i][j] = a[i][j] - m * a[k][j]
    return det


def scalar_kernel(rows, ncols):
    """Basis of the right kernel {v : A v = 0} by Gaussian elimination."""
    a = [list(r) for r in rows]
    nr = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nr):
            if not scalar_is_zero(a[i][c]):
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv_ = a[r][c]
        a[r] = [e / inv_ for e in a[r]]
        for i in range(nr):
            if i != r and not scalar_is_zero(a[i][c]):
                m = a[i][c]
                a[i] = [a[i][j] - m * a[r][j] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -a[ri][fc]
        basis.append(v)
    return basis


def scalar_solve(rows, rhs, ncols):
    """One solution of A v = rhs, or None."""
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    nr = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nr):
            if not scalar_is_zero(a[i][c]):
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv_ = a[r][c]
        a[r] = [e / inv_ for e in a[r]]
        for i in range(nr):
            if i != r and not scalar_is_zero(a[i][c]):
                m = a[i][c]
                a[i] = [a[i][j] - m * a[r][j] for j in range(ncols + 1)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if not scalar_is_zero(a[i][ncols]):
            return None
    v = [Fraction(0)] * ncols
    for ri, pc in enumerate(pivots):
        v[pc] = a[ri][ncols]
    return v
