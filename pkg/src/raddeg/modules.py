"""Right modules over a structure-constant algebra, and their morphisms.

A module of dimension d assigns to each algebra basis element b_i a d x d
matrix rho(b_i), acting on row vectors as v -> v @ rho(b_i), subject to
rho(b_i) rho(b_j) = rho(b_i b_j) and rho(1) = id.  Morphisms are matrices
acting on the right as well, so compose(f, g) applies f first and has
matrix F @ G.
"""

import itertools

from .algebra import (Algebra, find_nontrivial_idempotent, jacobson_radical,
                      opposite, primitive_idempotents, semisimple_quotient)
from .errors import ActionViolation, DimensionMismatch, InvariantViolation
from .linalg import EchelonSpan, Matrix, QuotientMap, row_space_basis

_TOKENS = itertools.count(1)


class Module:
    __slots__ = ("algebra", "dim", "action", "name", "_token", "_cache")

    def __init__(self, algebra, action, name=None, validate=True):
        if len(action) != algebra.dim:
            raise DimensionMismatch("need one action matrix per basis element")
        mats = []
        for a in action:
            if not isinstance(a, Matrix):
                a = Matrix(algebra.field, a)
            mats.append(a)
        dim = mats[0].nrows if mats else 0
        for a in mats:
            if a.nrows != dim or a.ncols != dim:
                raise DimensionMismatch("action matrices must be square of equal size")
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(mats)
        self.name = name
        self._token = next(_TOKENS)
        self._cache = {}
        if validate:
            self._validate()

    def _validate(self):
        A = self.algebra
        F = A.field
        ident = Matrix.identity(F, self.dim)
        unit_act = Matrix.zero(F, self.dim, self.dim)
        for t, c in enumerate(A.unit):
            if c != F.zero:
                unit_act = unit_act + self.action[t].scale(c)
        if unit_act != ident:
            raise ActionViolation("the unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.action[i] * self.action[j]
                rhs = Matrix.zero(F, self.dim, self.dim)
                for t, c in enumerate(A.mult[i][j]):
                    if c != F.zero:
                        rhs = rhs + self.action[t].scale(c)
                if lhs != rhs:
                    raise ActionViolation(
                        f"action is not multiplicative on basis pair ({i}, {j})")

    def action_of(self, x):
        """Action matrix of an arbitrary algebra element."""
        F = self.algebra.field
        out = Matrix.zero(F, self.dim, self.dim)
        for t, c in enumerate(x):
            if c != F.zero:
                out = out + self.action[t].scale(c)
        return out

    def __repr__(self):
        nm = self.name or f"module#{self._token}"
        return f"Module({nm}, dim={self.dim})"


class Morphism:
    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, validate=True):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(source.algebra.field, matrix, ncols=target.dim)
        if matrix.nrows != source.dim or matrix.ncols != target.dim:
            raise DimensionMismatch(
                f"matrix is {matrix.nrows}x{matrix.ncols}, expected "
                f"{source.dim}x{target.dim}")
        if source.algebra is not target.algebra:
            raise DimensionMismatch("morphism endpoints live over different algebras")
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            self._validate()

    def _validate(self):
        A = self.source.algebra
        gens = A._cache.get("generators")
        indices = gens if gens is not None else range(A.dim)
        for i in indices:
            if self.source.action[i] * self.matrix != self.matrix * self.target.action[i]:
                raise ActionViolation(f"matrix does not intertwine basis element {i}")

    def is_zero(self):
        return self.matrix.is_zero()

    def __add__(self, other):
        if self.source is not other.source or self.target is not other.target:
            raise DimensionMismatch("morphism sum needs equal endpoints")
        return Morphism(self.source, self.target, self.matrix + other.matrix,
                        validate=False)

    def __sub__(self, other):
        if self.source is not other.source or self.target is not other.target:
            raise DimensionMismatch("morphism difference needs equal endpoints")
        return Morphism(self.source, self.target, self.matrix - other.matrix,
                        validate=False)

    def scale(self, c):
        return Morphism(self.source, self.target, self.matrix.scale(c),
                        validate=False)

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source is other.source
                and self.target is other.target and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source._token, self.target._token, self.matrix))

    def __repr__(self):
        s = self.source.name or f"#{self.source._token}"
        t = self.target.name or f"#{self.target._token}"
        return f"Morphism({s} -> {t})"


def identity_morphism(m):
    return Morphism(m, m, Matrix.identity(m.algebra.field, m.dim), validate=False)


def zero_morphism(src, tgt):
    return Morphism(src, tgt, Matrix.zero(src.algebra.field, src.dim, tgt.dim),
                    validate=False)


def compose(f, g):
    """Apply f first, then g.  Needs f.target is g.source."""
    if f.target is not g.source:
        raise DimensionMismatch("composition endpoints do not match")
    return Morphism(f.source, g.target, f.matrix * g.matrix, validate=False)


def _vec(mat):
    out = []
    for r in mat.rows:
        out.extend(r)
    return tuple(out)


def _unvec(F, v, nrows, ncols):
    return Matrix(F, [v[r * ncols:(r + 1) * ncols] for r in range(nrows)],
                  ncols=ncols)


def hom_basis(x, y):
    """Basis of Hom(x, y) as a list of morphisms; deterministic and cached."""
    if x.algebra is not y.algebra:
        raise DimensionMismatch("hom spaces need a common algebra")
    A = x.algebra
    key = ("hom", x._token, y._token)
    cached = A._cache.get(key)
    if cached is None:
        cached = _solve_intertwiners(A, x, y)
        A._cache[key] = cached
    return [Morphism(x, y, m, validate=False) for m in cached]


def _solve_intertwiners(A, x, y):
    F = A.field
    nx, ny = x.dim, y.dim
    amb = nx * ny
    if amb == 0:
        return []
    cand = Matrix.identity(F, amb)
    gens = A._cache.get("generators")
    indices = gens if gens is not None else range(A.dim)
    for i in indices:
        if cand.nrows == 0:
            return []
        rows = []
        for r in range(cand.nrows):
            C = _unvec(F, cand.rows[r], nx, ny)
            D = x.action[i] * C - C * y.action[i]
            rows.append(_vec(D))
        image = Matrix(F, rows, ncols=amb)
        coeffs = image.left_kernel()
        cand = coeffs * cand
    basis = row_space_basis(cand)
    return [_unvec(F, basis.rows[r], nx, ny) for r in range(basis.nrows)]


def hom_dim(x, y):
    return len(hom_basis(x, y))


def submodule(parent, rows):
    """Submodule spanned by the given row vectors, with its inclusion."""
    A = parent.algebra
    F = A.field
    span = EchelonSpan(F, parent.dim)
    for r in rows:
        span.insert(tuple(r))
    B = span.basis_matrix()
    # closure check: the action must keep the span inside itself
    action = []
    for i in range(A.dim):
        mat_rows = []
        for r in range(B.nrows):
            img = Matrix(F, [B.rows[r]], parent.dim) * parent.action[i]
            coords = B.solve_left(img.rows[0])
            if coords is None:
                raise ActionViolation("row span is not a submodule")
            mat_rows.append(coords)
        action.append(Matrix(F, mat_rows, ncols=B.nrows))
    sub = Module(A, action, validate=False)
    incl = Morphism(sub, parent, B, validate=False)
    return sub, incl


def quotient_module(parent, rows):
    """Quotient by the span of the rows, with its projection."""
    A = parent.algebra
    F = A.field
    span = EchelonSpan(F, parent.dim)
    for r in rows:
        span.insert(tuple(r))
    qm = QuotientMap(span)
    d = qm.dim
    action = []
    for i in range(A.dim):
        mat_rows = []
        for c in qm.free_cols:
            basis_vec = tuple(F.one if t == c else F.zero for t in range(parent.dim))
            img = Matrix(F, [basis_vec], parent.dim) * parent.action[i]
            mat_rows.append(qm.project_vector(tuple(img.rows[0])))
        action.append(Matrix(F, mat_rows, ncols=d))
    quo = Module(A, action, validate=False)
    proj = Morphism(parent, quo, qm.projection_matrix(), validate=False)
    return quo, proj


def kernel(f):
    """(kernel module, inclusion into the source)."""
    K = f.matrix.left_kernel()
    return submodule(f.source, [K.rows[r] for r in range(K.nrows)])


def image(f):
    """(image module, inclusion into the target)."""
    B = row_space_basis(f.matrix)
    return submodule(f.target, [B.rows[r] for r in range(B.nrows)])


def cokernel(f):
    """(cokernel module, projection from the target)."""
    B = row_space_basis(f.matrix)
    return quotient_module(f.target, [B.rows[r] for r in range(B.nrows)])


def is_mono(f):
    return f.matrix.rank() == f.source.dim


def is_epi(f):
    return f.matrix.rank() == f.target.dim


def is_isomorphism(f):
    return f.source.dim == f.target.dim and f.matrix.rank() == f.source.dim


def zero_module(algebra):
    F = algebra.field
    return Module(algebra, [Matrix(F, [], ncols=0)] * algebra.dim,
                  name="0", validate=False)


def dimension_vector(m):
    """Dimensions of m e over the primitive idempotents e of the algebra."""
    return tuple(m.action_of(e).rank()
                 for e in primitive_idempotents(m.algebra))


def direct_sum(summands):
    """(sum, inclusions, projections); block diagonal actions."""
    if not summands:
        raise ValueError("direct sum needs at least one summand")
    A = summands[0].algebra
    F = A.field
    for m in summands:
        if m.algebra is not A:
            raise DimensionMismatch("summands live over different algebras")
    total = sum(m.dim for m in summands)
    action = []
    for i in range(A.dim):
        rows = [[F.zero] * total for _ in range(total)]
        off = 0
        for m in summands:
            a = m.action[i]
            for r in range(m.dim):
                for c in range(m.dim):
                    rows[off + r][off + c] = a.rows[r][c]
            off += m.dim
        action.append(Matrix(F, rows, ncols=total))
    out = Module(A, action, validate=False)
    incls = []
    projs = []
    off = 0
    for m in summands:
        inc = Matrix.zero(F, m.dim, total).rows
        for r in range(m.dim):
            inc[r][off + r] = F.one
        incls.append(Morphism(m, out, Matrix(F, inc, ncols=total), validate=False))
        pr = Matrix.zero(F, total, m.dim).rows
        for r in range(m.dim):
            pr[off + r][r] = F.one
        projs.append(Morphism(out, m, Matrix(F, pr, ncols=m.dim), validate=False))
        off += m.dim
    return out, incls, projs


def endo_algebra(m):
    """(endomorphism algebra, basis of matrices).  Cached on the module."""
    cached = m._cache.get("endo")
    if cached is not None:
        return cached
    if m.dim == 0:
        raise ValueError("the zero module has a zero endomorphism ring")
    A = m.algebra
    F = A.field
    mats = [f.matrix for f in hom_basis(m, m)]
    n = len(mats)
    stacked = Matrix(F, [_vec(b) for b in mats], ncols=m.dim * m.dim)
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = mats[i] * mats[j]
            coords = stacked.solve_left(_vec(prod))
            if coords is None:
                raise InvariantViolation("endomorphism product left the hom space")
            row.append(tuple(coords))
        mult.append(row)
    unit = stacked.solve_left(_vec(Matrix.identity(F, m.dim)))
    if unit is None:
        raise InvariantViolation("identity missing from the endomorphism space")
    E = Algebra(F, mult, tuple(unit), validate=False)
    result = (E, mats)
    m._cache["endo"] = result
    return result


def endo_element_matrix(m, coeffs):
    """Realize an endomorphism-algebra element as an actual matrix on m."""
    F = m.algebra.field
    _E, mats = endo_algebra(m)
    out = Matrix.zero(F, m.dim, m.dim)
    for c, b in zip(coeffs, mats):
        if c != F.zero:
            out = out + b.scale(c)
    return out


def residue_division_algebra(m):
    """End(m) modulo its radical; a division algebra when m is indecomposable."""
    E, _ = endo_algebra(m)
    S, _qm = semisimple_quotient(E)
    return S


def is_indecomposable(m):
    if m.dim == 0:
        return False
    E, _ = endo_algebra(m)
    return find_nontrivial_idempotent(E) is None


def decompose(m):
    """Split into indecomposable summands: a list of (summand, incl, proj).

    incl is a section of proj, and the compositions incl.proj sum to the
    identity of m.
    """
    if m.dim == 0:
        return []
    cached = m._cache.get("decomposition")
    if cached is not None:
        return cached
    A = m.algebra
    F = A.field
    E, mats = endo_algebra(m)
    prims = primitive_idempotents(E)
    out = []
    for e in prims:
        emat = Matrix.zero(F, m.dim, m.dim)
        for c, b in zip(e, mats):
            if c != F.zero:
                emat = emat + b.scale(c)
        basis = row_space_basis(emat)
        summand, incl = submodule(m, [basis.rows[r] for r in range(basis.nrows)])
        proj_rows = []
        for i in range(m.dim):
            unit_vec = tuple(F.one if t == i else F.zero for t in range(m.dim))
            img = Matrix(F, [unit_vec], m.dim) * emat
            coords = incl.matrix.solve_left(img.rows[0])
            if coords is None:
                raise InvariantViolation("idempotent image escaped its own span")
            proj_rows.append(coords)
        proj = Morphism(m, summand, Matrix(F, proj_rows, ncols=summand.dim),
                        validate=False)
        out.append((summand, incl, proj))
    m._cache["decomposition"] = out
    return out


def _indec_isomorphic(x, y):
    # for indecomposables some basis morphism is an isomorphism iff x = y:
    # otherwise every basis element composed with a fixed iso would stay in
    # the radical of End(y) and could not span it
    if x.dim != y.dim:
        return False
    if x is y:
        return True
    for f in hom_basis(x, y):
        if f.matrix.rank() == x.dim:
            return True
    return False


def is_isomorphic(x, y):
    """Module isomorphism test via decomposition and summand matching."""
    if x is y:
        return True
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    xs = [s for s, _i, _p in decompose(x)]
    ys = [s for s, _i, _p in decompose(y)]
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for s in xs:
        for idx, t in enumerate(remaining):
            if _indec_isomorphic(s, t):
                del remaining[idx]
                break
        else:
            return False
    return True


def find_isomorphism(x, y):
    """An explicit isomorphism between indecomposable modules, or None."""
    if x.dim != y.dim:
        return None
    if x is y:
        return identity_morphism(x)
    for f in hom_basis(x, y):
        if f.matrix.rank() == x.dim:
            return f
    return None


def radical_submodule(m):
    """(m J, inclusion)."""
    A = m.algebra
    J = jacobson_radical(A)
    rows = []
    for r in range(J.nrows):
        act = m.action_of(tuple(J.rows[r]))
        rows.extend(act.rows)
    return submodule(m, rows)


def top(m):
    """(m / mJ, projection)."""
    A = m.algebra
    J = jacobson_radical(A)
    rows = []
    for r in range(J.nrows):
        act = m.action_of(tuple(J.rows[r]))
        rows.extend(act.rows)
    return quotient_module(m, rows)


def socle(m):
    """(largest submodule killed by J, inclusion)."""
    A = m.algebra
    F = A.field
    J = jacobson_radical(A)
    if J.nrows == 0:
        return submodule(m, Matrix.identity(F, m.dim).rows)
    stacked = None
    for r in range(J.nrows):
        act = m.action_of(tuple(J.rows[r]))
        stacked = act if stacked is None else stacked.hstack(act)
    K = stacked.left_kernel()
    return submodule(m, K.rows)


def is_simple(m):
    if m.dim == 0:
        return False
    sub, _ = radical_submodule(m)
    return sub.dim == 0 and is_indecomposable(m)


def regular_module(algebra):
    """The algebra as a right module over itself."""
    cached = algebra._cache.get("regular")
    if cached is None:
        cached = Module(algebra, list(algebra._right_mats()),
                        name="regular", validate=False)
        algebra._cache["regular"] = cached
    return cached


def projective_indecomposables(algebra):
    """One projective e_i A per primitive idempotent, in splitting order.

    The list is not deduplicated up to isomorphism, so its length always
    matches the number of simples counted with multiplicity one per
    idempotent.
    """
    cached = algebra._cache.get("projectives")
    if cached is not None:
        return cached
    reg = regular_module(algebra)
    out = []
    for e in primitive_idempotents(algebra):
        rows = [algebra.mul(e, algebra.basis_element(i)) for i in range(algebra.dim)]
        sub, _incl = submodule(reg, rows)
        sub.name = f"P({algebra.format_element(e)})"
        out.append(sub)
    algebra._cache["projectives"] = out
    return out


def simple_modules(algebra):
    """Tops of the projective indecomposables, in the same order."""
    cached = algebra._cache.get("simples")
    if cached is not None:
        return cached
    out = []
    for p in projective_indecomposables(algebra):
        t, _ = top(p)
        t.name = f"top {p.name}"
        out.append(t)
    algebra._cache["simples"] = out
    return out


def dual_module(m):
    """k-linear dual, a module over the opposite algebra."""
    op = opposite(m.algebra)
    action = [a.transpose() for a in m.action]
    name = f"D({m.name})" if m.name else None
    return Module(op, action, name=name, validate=False)


def injective_indecomposables(algebra):
    """Duals of the opposite projectives, ordered like the projectives."""
    cached = algebra._cache.get("injectives")
    if cached is not None:
        return cached
    op = opposite(algebra)
    reg = regular_module(op)
    out = []
    for e in primitive_idempotents(algebra):
        rows = [op.mul(e, op.basis_element(i)) for i in range(op.dim)]
        sub, _incl = submodule(reg, rows)
        inj = dual_module(sub)
        inj.name = f"I({algebra.format_element(e)})"
        out.append(inj)
    algebra._cache["injectives"] = out
    return out


def _matches_catalogue(m, reference):
    for s, _i, _p in decompose(m):
        if not any(_indec_isomorphic(s, r) for r in reference):
            return False
    return True


def is_projective(m):
    if m.dim == 0:
        return True
    return _matches_catalogue(m, projective_indecomposables(m.algebra))


def is_injective(m):
    if m.dim == 0:
        return True
    return _matches_catalogue(m, injective_indecomposables(m.algebra))
