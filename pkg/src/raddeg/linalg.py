"""Exact matrices and subspace calculus, row-vector convention throughout.

Vectors are rows; a matrix acts on the right (v -> v*M), so composing
maps left-to-right is plain matrix multiplication.  Subspaces are kept
in reduced row echelon form, which makes every basis canonical: two
bases span the same subspace iff they are entrywise equal.
"""

from .errors import DimensionMismatch


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionMismatch("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zero(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = o
        return cls(field, rows, ncols=n)

    def copy(self):
        return Matrix(self.field, [list(r) for r in self.rows], ncols=self.ncols)

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.rows for x in r)

    def row(self, i):
        return list(self.rows[i])

    def transpose(self):
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.nrows == self.nrows
            and other.ncols == self.ncols
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        if self.nrows == 0:
            return f"Matrix(0x{self.ncols})"
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"[{body}]"

    def __add__(self, other):
        self._check_same_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], ncols=self.ncols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows], ncols=self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        F = self.field
        z = F.zero
        add, mul = F.add, F.mul
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [z] * other.ncols
            for k, a in enumerate(r):
                if a == z:
                    continue
                orow = orows[k]
                for j, b in enumerate(orow):
                    if b == z:
                        continue
                    acc[j] = add(acc[j], mul(a, b))
            out.append(acc)
        return Matrix(F, out, ncols=other.ncols)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack with different row counts")
        return Matrix(
            self.field,
            [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols + other.ncols,
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise DimensionMismatch("vstack with different column counts")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def _check_same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("shape mismatch")

    # -- elimination ------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column tuple)."""
        F = self.field
        z = F.zero
        rows = [list(r) for r in self.rows]
        pivots = []
        pr = 0
        for col in range(self.ncols):
            sel = None
            for r in range(pr, len(rows)):
                if rows[r][col] != z:
                    sel = r
                    break
            if sel is None:
                continue
            rows[pr], rows[sel] = rows[sel], rows[pr]
            inv = F.inv(rows[pr][col])
            if inv != F.one:
                rows[pr] = [F.mul(inv, x) for x in rows[pr]]
            prow = rows[pr]
            for r in range(len(rows)):
                if r == pr:
                    continue
                c = rows[r][col]
                if c == z:
                    continue
                rr = rows[r]
                for j in range(col, self.ncols):
                    if prow[j] != z:
                        rr[j] = F.sub(rr[j], F.mul(c, prow[j]))
            pivots.append(col)
            pr += 1
            if pr == len(rows):
                break
        return Matrix(F, rows, ncols=self.ncols), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def left_kernel(self):
        """Canonical basis of {v : v*M = 0}, as rows of a matrix."""
        F = self.field
        z = F.zero
        n, m = self.nrows, self.ncols
        # eliminate on [M | I]; rows with zero M-part carry kernel vectors
        aug = [list(self.rows[i]) + [F.one if j == i else z for j in range(n)] for i in range(n)]
        pr = 0
        for col in range(m):
            sel = None
            for r in range(pr, n):
                if aug[r][col] != z:
                    sel = r
                    break
            if sel is None:
                continue
            aug[pr], aug[sel] = aug[sel], aug[pr]
            inv = F.inv(aug[pr][col])
            if inv != F.one:
                aug[pr] = [F.mul(inv, x) for x in aug[pr]]
            prow = aug[pr]
            for r in range(n):
                if r == pr:
                    continue
                c = aug[r][col]
                if c == z:
                    continue
                rr = aug[r]
                for j in range(col, m + n):
                    if prow[j] != z:
                        rr[j] = F.sub(rr[j], F.mul(c, prow[j]))
            pr += 1
            if pr == n:
                break
        vectors = [row[m:] for row in aug[pr:]]
        ker = Matrix(F, vectors, ncols=n)
        return ker.rref()[0]

    def solve_left(self, b):
        """Some x with x*M = b (free variables zero), or None."""
        F = self.field
        if len(b) != self.ncols:
            raise DimensionMismatch("right-hand side length mismatch")
        z = F.zero
        n, m = self.nrows, self.ncols
        aug = [list(self.rows[i]) + [F.one if j == i else z for j in range(n)] for i in range(n)]
        pr = 0
        pivots = []
        for col in range(m):
            sel = None
            for r in range(pr, n):
                if aug[r][col] != z:
                    sel = r
                    break
            if sel is None:
                continue
            aug[pr], aug[sel] = aug[sel], aug[pr]
            inv = F.inv(aug[pr][col])
            if inv != F.one:
                aug[pr] = [F.mul(inv, x) for x in aug[pr]]
            prow = aug[pr]
            for r in range(n):
                if r == pr:
                    continue
                c = aug[r][col]
                if c == z:
                    continue
                rr = aug[r]
                for j in range(m + n):
                    if prow[j] != z:
                        rr[j] = F.sub(rr[j], F.mul(c, prow[j]))
            pivots.append(col)
            pr += 1
            if pr == n:
                break
        resid = list(b)
        x = [z] * n
        for r, col in enumerate(pivots):
            c = resid[col]
            if c == z:
                continue
            rr = aug[r]
            for j in range(m):
                if rr[j] != z:
                    resid[j] = F.sub(resid[j], F.mul(c, rr[j]))
            for j in range(n):
                if rr[m + j] != z:
                    x[j] = F.add(x[j], F.mul(c, rr[m + j]))
        if any(v != z for v in resid):
            return None
        return x


def solve_left_matrix(A, B):
    """X with X*A = B, solving row by row; None if any row is inconsistent."""
    out = []
    for r in B.rows:
        x = A.solve_left(r)
        if x is None:
            return None
        out.append(x)
    return Matrix(A.field, out, ncols=A.nrows)


class EchelonSpan:
    """A subspace of k^n kept in reduced row echelon form.

    Supports incremental insertion, membership, residue reduction, and a
    canonical basis matrix.  The canonical form makes equality of
    subspaces equality of bases.
    """

    def __init__(self, field, ambient):
        self.field = field
        self.ambient = ambient
        self._rows = []  # unordered, each with a distinct pivot column
        self._pivot_of_row = []
        self._pivots = {}  # pivot column -> index into _rows

    @classmethod
    def from_rows(cls, field, ambient, rows):
        span = cls(field, ambient)
        for r in rows:
            span.insert(r)
        return span

    @classmethod
    def from_matrix(cls, mat):
        return cls.from_rows(mat.field, mat.ncols, mat.rows)

    @property
    def dim(self):
        return len(self._rows)

    def reduce(self, v):
        """Residue of v modulo the span; pivot coordinates get cleared."""
        F = self.field
        z = F.zero
        v = list(v)
        if len(v) != self.ambient:
            raise DimensionMismatch("vector length mismatch")
        for col, idx in self._pivots.items():
            c = v[col]
            if c == z:
                continue
            row = self._rows[idx]
            for j in range(self.ambient):
                if row[j] != z:
                    v[j] = F.sub(v[j], F.mul(c, row[j]))
        return v

    def coefficients(self, v):
        """Coordinates of v in the stored basis, or None if v is outside."""
        F = self.field
        z = F.zero
        v = list(v)
        coeffs = [z] * len(self._rows)
        for col, idx in self._pivots.items():
            c = v[col]
            if c == z:
                continue
            coeffs[idx] = c
            row = self._rows[idx]
            for j in range(self.ambient):
                if row[j] != z:
                    v[j] = F.sub(v[j], F.mul(c, row[j]))
        if any(x != z for x in v):
            return None
        order = sorted(range(len(self._rows)), key=self._pivot_of_row.__getitem__)
        return [coeffs[i] for i in order]

    def contains(self, v):
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    def insert(self, v):
        """Add v to the span; True iff the dimension grew."""
        F = self.field
        z = F.zero
        v = self.reduce(v)
        pivot = None
        for j, x in enumerate(v):
            if x != z:
                pivot = j
                break
        if pivot is None:
            return False
        inv = F.inv(v[pivot])
        if inv != F.one:
            v = [F.mul(inv, x) for x in v]
        # keep the stored basis fully reduced
        for row in self._rows:
            c = row[pivot]
            if c == z:
                continue
            for j in range(self.ambient):
                if v[j] != z:
                    row[j] = F.sub(row[j], F.mul(c, v[j]))
        self._pivots[pivot] = len(self._rows)
        self._pivot_of_row.append(pivot)
        self._rows.append(v)
        return True

    def extend(self, rows):
        grew = False
        for r in rows:
            grew = self.insert(r) or grew
        return grew

    def basis_matrix(self):
        order = sorted(range(len(self._rows)), key=self._pivot_of_row.__getitem__)
        return Matrix(self.field, [list(self._rows[i]) for i in order], ncols=self.ambient)

    def pivot_columns(self):
        return tuple(sorted(self._pivots))

    def __eq__(self, other):
        return (
            isinstance(other, EchelonSpan)
            and other.field == self.field
            and other.ambient == self.ambient
            and other.basis_matrix() == self.basis_matrix()
        )

    def __repr__(self):
        return f"EchelonSpan(dim {self.dim} in k^{self.ambient})"


class QuotientMap:
    """The quotient k^n -> k^n / S with coordinates on the non-pivot columns."""

    def __init__(self, span):
        self.span = span
        self.field = span.field
        self.ambient = span.ambient
        self.free_cols = [j for j in range(span.ambient) if j not in span._pivots]
        self.dim = len(self.free_cols)

    def project_vector(self, v):
        resid = self.span.reduce(v)
        return [resid[j] for j in self.free_cols]

    def lift_vector(self, w):
        z = self.field.zero
        v = [z] * self.ambient
        for x, j in zip(w, self.free_cols):
            v[j] = x
        return v

    def projection_matrix(self):
        z, o = self.field.zero, self.field.one
        rows = []
        for i in range(self.ambient):
            e = [z] * self.ambient
            e[i] = o
            rows.append(self.project_vector(e))
        return Matrix(self.field, rows, ncols=self.dim)

    def lift_matrix(self):
        z, o = self.field.zero, self.field.one
        rows = []
        for j in self.free_cols:
            e = [z] * self.ambient
            e[j] = o
            rows.append(e)
        return Matrix(self.field, rows, ncols=self.ambient)


def row_space_basis(mat):
    """Canonical basis of the row space: rref with zero rows dropped."""
    R, pivots = mat.rref()
    return Matrix(mat.field, R.rows[: len(pivots)], ncols=mat.ncols)


def sum_row_spaces(a, b):
    if a.ncols != b.ncols or a.field != b.field:
        raise DimensionMismatch("ambient mismatch")
    span = EchelonSpan.from_matrix(a)
    span.extend(b.rows)
    return span.basis_matrix()


def intersect_row_spaces(a, b):
    """Canonical basis of rowspace(a) & rowspace(b).

    v = x*a = y*b iff (x, y) kills the stacked matrix [a; -b]; the x-part
    then produces the intersection.
    """
    if a.ncols != b.ncols or a.field != b.field:
        raise DimensionMismatch("ambient mismatch")
    stacked = a.vstack(-b)
    ker = stacked.left_kernel()
    xs = Matrix(a.field, [r[: a.nrows] for r in ker.rows], ncols=a.nrows)
    return row_space_basis(xs * a) if xs.nrows else Matrix(a.field, [], ncols=a.ncols)


def char_poly(M):
    """Characteristic polynomial of a square matrix, coefficients low->high, monic.

    Hessenberg reduction by similarity transformations, then the standard
    determinant recurrence on the Hessenberg form.  Exact over any field.
    """
    F = M.field
    n = M.nrows
    if n != M.ncols:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    z = F.zero
    H = [list(r) for r in M.rows]
    for col in range(n - 2):
        sel = None
        for r in range(col + 1, n):
            if H[r][col] != z:
                sel = r
                break
        if sel is None:
            continue
        if sel != col + 1:
            H[sel], H[col + 1] = H[col + 1], H[sel]
            for r in range(n):
                H[r][sel], H[r][col + 1] = H[r][col + 1], H[r][sel]
        inv = F.inv(H[col + 1][col])
        for r in range(col + 2, n):
            c = H[r][col]
            if c == z:
                continue
            factor = F.mul(c, inv)
            hrow = H[col + 1]
            rrow = H[r]
            for j in range(n):
                if hrow[j] != z:
                    rrow[j] = F.sub(rrow[j], F.mul(factor, hrow[j]))
            # compensate on columns to keep similarity
            for rr in range(n):
                if H[rr][r] != z:
                    H[rr][col + 1] = F.add(H[rr][col + 1], F.mul(factor, H[rr][r]))
    # p_0 = 1; p_m from the leading principal m x m Hessenberg block
    polys = [[F.one]]
    for m in range(1, n + 1):
        d = H[m - 1][m - 1]
        term = [F.zero] + polys[m - 1]  # x * p_{m-1}
        shifted = [F.sub(term[i] if i < len(term) else z, F.mul(d, polys[m - 1][i]) if i < len(polys[m - 1]) else z) for i in range(m + 1)]
        prod = F.one
        for i in range(1, m):
            prod = F.mul(prod, H[m - i][m - i - 1])
            coeff = F.mul(H[m - 1 - i][m - 1], prod)
            if coeff == z:
                continue
            p = polys[m - 1 - i]
            for j in range(len(p)):
                shifted[j] = F.sub(shifted[j], F.mul(coeff, p[j]))
        polys.append(shifted)
    return polys[n]
