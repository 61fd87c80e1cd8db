"""Finite dimensional associative unital algebras with explicit structure constants.

Elements are row coordinate vectors (tuples) over a fixed basis b_0..b_{n-1}.
All multiplication conventions follow the row-vector, right-module picture:
left_mult_matrix(x) has row i equal to the coordinates of x*b_i, so the map
v -> x*v is v |-> v @ L_x.
"""

import itertools
from collections import deque

from .errors import (AssociativityViolation, InvariantViolation, NotAdmissible,
                     ResourceLimit, SearchExhausted, UnitViolation)
from .fields import poly_coprime_split, poly_mul, poly_xgcd
from .linalg import EchelonSpan, Matrix, QuotientMap, char_poly, row_space_basis


def _vadd(F, a, b):
    return tuple(F.add(x, y) for x, y in zip(a, b))


def _vsub(F, a, b):
    return tuple(F.sub(x, y) for x, y in zip(a, b))


def _vscale(F, c, a):
    return tuple(F.mul(c, x) for x in a)


def _vzero(F, n):
    return (F.zero,) * n


class Algebra:
    """Structure-constant algebra.  mult[i][j] holds the coordinates of b_i * b_j."""

    __slots__ = ("field", "dim", "mult", "unit", "labels",
                 "_left_basis", "_right_basis", "_traces",
                 "_radical", "_semisimple", "_cache")

    def __init__(self, field, mult, unit, labels=None, validate=True):
        n = len(unit)
        if n == 0:
            raise ValueError("algebra must have positive dimension")
        if len(mult) != n or any(len(row) != n for row in mult):
            raise ValueError("structure constant table must be dim x dim")
        self.field = field
        self.dim = n
        self.mult = tuple(tuple(tuple(entry) for entry in row) for row in mult)
        for row in self.mult:
            for entry in row:
                if len(entry) != n:
                    raise ValueError("structure constant entries must have length dim")
        self.unit = tuple(unit)
        if labels is None:
            labels = tuple(f"b{i}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("need one label per basis element")
        self.labels = labels
        self._left_basis = None
        self._right_basis = None
        self._traces = None
        self._radical = None
        self._semisimple = None
        self._cache = {}
        if validate:
            self._validate()

    def _validate(self):
        F = self.field
        n = self.dim
        for i in range(n):
            e = self.basis_element(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise UnitViolation(i)
        # (b_i x) b_k == b_i (x b_k) for all basis x is associativity by linearity
        L = self._left_mats()
        R = self._right_mats()
        for i in range(n):
            for k in range(n):
                a = L[i] * R[k]
                b = R[k] * L[i]
                if a != b:
                    for j in range(n):
                        if a.rows[j] != b.rows[j]:
                            raise AssociativityViolation(i, j, k)

    def basis_element(self, i):
        F = self.field
        return tuple(F.one if t == i else F.zero for t in range(self.dim))

    def zero_element(self):
        return _vzero(self.field, self.dim)

    def label_index(self, name):
        try:
            return self.labels.index(name)
        except ValueError:
            raise KeyError(f"no basis element labelled {name!r}")

    def _left_mats(self):
        if self._left_basis is None:
            self._left_basis = tuple(
                Matrix(self.field, self.mult[i], self.dim) for i in range(self.dim))
        return self._left_basis

    def _right_mats(self):
        if self._right_basis is None:
            F = self.field
            self._right_basis = tuple(
                Matrix(F, [self.mult[t][i] for t in range(self.dim)], self.dim)
                for i in range(self.dim))
        return self._right_basis

    def mul(self, x, y):
        F = self.field
        zero = F.zero
        acc = list(_vzero(F, self.dim))
        mult = self.mult
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            row = mult[i]
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                c = F.mul(xi, yj)
                entry = row[j]
                for t, mt in enumerate(entry):
                    if mt != zero:
                        acc[t] = F.add(acc[t], F.mul(c, mt))
        return tuple(acc)

    def left_mult_matrix(self, x):
        """Row i is x * b_i."""
        F = self.field
        zero = F.zero
        rows = [list(_vzero(F, self.dim)) for _ in range(self.dim)]
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for t in range(self.dim):
                entry = self.mult[i][t]
                row = rows[t]
                for s, ms in enumerate(entry):
                    if ms != zero:
                        row[s] = F.add(row[s], F.mul(xi, ms))
        return Matrix(F, rows, self.dim)

    def right_mult_matrix(self, x):
        """Row i is b_i * x."""
        F = self.field
        zero = F.zero
        rows = [list(_vzero(F, self.dim)) for _ in range(self.dim)]
        for j, xj in enumerate(x):
            if xj == zero:
                continue
            for t in range(self.dim):
                entry = self.mult[t][j]
                row = rows[t]
                for s, ms in enumerate(entry):
                    if ms != zero:
                        row[s] = F.add(row[s], F.mul(xj, ms))
        return Matrix(F, rows, self.dim)

    def trace_left(self, x):
        """Trace of left multiplication by x on the algebra."""
        if self._traces is None:
            F = self.field
            taus = []
            for t in range(self.dim):
                acc = F.zero
                for j in range(self.dim):
                    acc = F.add(acc, self.mult[t][j][j])
                taus.append(acc)
            self._traces = tuple(taus)
        F = self.field
        acc = F.zero
        for xt, tau in zip(x, self._traces):
            acc = F.add(acc, F.mul(xt, tau))
        return acc

    def power(self, x, e):
        acc = self.unit
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def min_poly(self, x):
        """Monic minimal polynomial of x, coefficients low degree first."""
        F = self.field
        span = EchelonSpan(F, self.dim)
        powers = [self.unit]
        span.insert(self.unit)
        cur = self.unit
        while True:
            cur = self.mul(cur, x)
            if not span.insert(cur):
                sol = Matrix(F, powers, self.dim).solve_left(cur)
                return [F.neg(c) for c in sol] + [F.one]
            powers.append(cur)

    def evaluate_poly(self, coeffs, x):
        F = self.field
        acc = self.zero_element()
        for c in reversed(coeffs):
            acc = self.mul(acc, x)
            if c != F.zero:
                acc = _vadd(F, acc, _vscale(F, c, self.unit))
        return acc

    def format_element(self, x):
        F = self.field
        parts = []
        for c, lab in zip(x, self.labels):
            if c == F.zero:
                continue
            if c == F.one:
                parts.append(lab)
            else:
                parts.append(f"{F.format(c)}*{lab}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Algebra(dim={self.dim} over {self.field!r})"


def from_structure_constants(field, mult, unit, labels=None, validate=True):
    """Build an algebra from a full multiplication table, checking the axioms."""
    return Algebra(field, mult, unit, labels=labels, validate=validate)


def center(algebra):
    """Basis of the centre as a canonical row matrix."""
    F = algebra.field
    n = algebra.dim
    L = algebra._left_mats()
    R = algebra._right_mats()
    blocks = None
    for i in range(n):
        D = R[i] - L[i]
        blocks = D if blocks is None else blocks.hstack(D)
    return row_space_basis(blocks.left_kernel())


def _dickson_radical(algebra):
    # char 0: x is in the radical iff trace(L_{xy}) = 0 for all y
    F = algebra.field
    n = algebra.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(algebra.trace_left(algebra.mult[i][j]))
        rows.append(row)
    return row_space_basis(Matrix(F, rows, n).left_kernel())


def _ciw_radical(algebra):
    # Cohen-Ivanyos-Wales chain.  The plain trace form is degenerate in
    # characteristic p; the level-i functional uses the coefficient of
    # lambda^(n - p^i) of the characteristic polynomial of left
    # multiplication, pulled back through i Frobenius inverses.
    F = algebra.field
    p = F.char
    n = algebra.dim
    basis = [algebra.basis_element(t) for t in range(n)]
    level = 0
    while p ** level <= n and basis:
        coeff_index = n - p ** level
        m = len(basis)
        rows = []
        for ws in basis:
            row = []
            for yt in basis:
                z = algebra.mul(ws, yt)
                cp = char_poly(algebra.left_mult_matrix(z))
                c = cp[coeff_index]
                for _ in range(level):
                    c = F.frobenius_inverse(c)
                row.append(c)
            rows.append(row)
        coeffs = Matrix(F, rows, m).left_kernel()
        new_basis = []
        for r in range(coeffs.nrows):
            vec = _vzero(F, n)
            for s, c in enumerate(coeffs.rows[r]):
                if c != F.zero:
                    vec = _vadd(F, vec, _vscale(F, c, basis[s]))
            new_basis.append(vec)
        mat = row_space_basis(Matrix(F, new_basis, n)) if new_basis else Matrix(F, [], n)
        basis = [mat.rows[r] for r in range(mat.nrows)]
        level += 1
    return Matrix(F, basis, n)


def jacobson_radical(algebra):
    """Canonical row basis of the Jacobson radical."""
    if algebra._radical is None:
        if algebra.field.char == 0:
            algebra._radical = _dickson_radical(algebra)
        else:
            algebra._radical = _ciw_radical(algebra)
    return algebra._radical


def semisimple_quotient(algebra):
    """The quotient by the radical, with the quotient map.  Cached."""
    if algebra._semisimple is None:
        F = algebra.field
        rad = jacobson_radical(algebra)
        span = EchelonSpan.from_matrix(rad)
        qm = QuotientMap(span)
        m = qm.dim
        lifts = [qm.lift_vector(tuple(F.one if t == i else F.zero for t in range(m)))
                 for i in range(m)]
        mult = []
        for i in range(m):
            row = []
            for j in range(m):
                row.append(qm.project_vector(algebra.mul(lifts[i], lifts[j])))
            mult.append(row)
        unit = qm.project_vector(algebra.unit)
        labels = tuple(algebra.labels[c] for c in qm.free_cols)
        quo = Algebra(F, mult, unit, labels=labels, validate=False)
        algebra._semisimple = (quo, qm)
    return algebra._semisimple


def opposite(algebra):
    """Same space, reversed multiplication.  Cached, and an involution on
    the nose: opposite(opposite(a)) is a."""
    cached = algebra._cache.get("opposite")
    if cached is not None:
        return cached
    n = algebra.dim
    mult = [[algebra.mult[j][i] for j in range(n)] for i in range(n)]
    op = Algebra(algebra.field, mult, algebra.unit,
                 labels=algebra.labels, validate=False)
    gens = algebra._cache.get("generators")
    if gens is not None:
        op._cache["generators"] = gens
    algebra._cache["opposite"] = op
    op._cache["opposite"] = algebra
    return op


def corner_algebra(algebra, e):
    """(eAe, embedding) for an idempotent e.  Embedding rows are A-coordinates."""
    F = algebra.field
    span = EchelonSpan(F, algebra.dim)
    for i in range(algebra.dim):
        v = algebra.mul(algebra.mul(e, algebra.basis_element(i)), e)
        span.insert(v)
    B = span.basis_matrix()
    m = B.nrows
    if m == 0:
        raise InvariantViolation("corner at a zero idempotent")
    rows = [B.rows[r] for r in range(m)]
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = algebra.mul(rows[i], rows[j])
            coords = B.solve_left(prod)
            if coords is None:
                raise InvariantViolation("corner is not closed under multiplication")
            row.append(tuple(coords))
        mult.append(row)
    unit = B.solve_left(e)
    if unit is None:
        raise InvariantViolation("idempotent missing from its own corner")
    labels = tuple(f"c{i}" for i in range(m))
    return Algebra(F, mult, tuple(unit), labels=labels, validate=False), B


def _is_idempotent(algebra, e):
    return algebra.mul(e, e) == e


def _split_from_element(algebra, f):
    """Try to produce a nontrivial idempotent from the subalgebra k[f]."""
    F = algebra.field
    m = algebra.min_poly(f)
    if len(m) < 3:
        return None
    split = poly_coprime_split(F, m)
    if split is None:
        return None
    g, h = split
    d, u, _v = poly_xgcd(F, g, h)
    if len(d) != 1:
        raise InvariantViolation("coprime split with nonconstant gcd")
    e = algebra.evaluate_poly(poly_mul(F, u, g), f)
    if not _is_idempotent(algebra, e):
        raise InvariantViolation("CRT idempotent failed its defining identity")
    if e == algebra.zero_element() or e == algebra.unit:
        return None
    return e


def _frobenius_fixed_central(semi):
    """Fixed points of the order-q Frobenius on the centre; rows in algebra coords."""
    F = semi.field
    Z = center(semi)
    m = Z.nrows
    rows = []
    for r in range(m):
        y = semi.power(Z.rows[r], F.order)
        coords = Z.solve_left(y)
        if coords is None:
            raise InvariantViolation("Frobenius left the centre")
        rows.append(coords)
    phi = Matrix(F, rows, m)
    fixed = (phi - Matrix.identity(F, m)).left_kernel()
    return fixed * Z, Z


def _semisimple_nontrivial_idempotent(semi):
    F = semi.field
    if semi.dim == 1:
        return None
    if F.char > 0:
        fixed, Z = _frobenius_fixed_central(semi)
        if fixed.nrows > 1:
            unit_span = EchelonSpan.from_rows(F, semi.dim, [semi.unit])
            for r in range(fixed.nrows):
                f = fixed.rows[r]
                if unit_span.contains(f):
                    continue
                e = _split_from_element(semi, f)
                if e is None:
                    raise InvariantViolation(
                        "non-scalar Frobenius-fixed central element must split")
                return e
            raise InvariantViolation("fixed space of dim > 1 inside the scalars")
        if semi.dim == Z.nrows:
            # one simple block and commutative: a field extension, no idempotents
            return None
        # single block M_n(K) with n >= 2; hunt for an element whose minimal
        # polynomial factors
        e = _scan_for_split(semi, _finite_candidates(semi))
        if e is not None:
            return e
        if F.order ** semi.dim <= 65536:
            for tup in itertools.product(list(F.elements()), repeat=semi.dim):
                e = _split_from_element(semi, tup)
                if e is not None:
                    return e
        raise SearchExhausted(
            "no splitting element found in a single-block semisimple algebra")
    # rationals: no Frobenius available, scan structured candidates and be
    # honest when nothing splits (a division algebra cannot be certified here)
    e = _scan_for_split(semi, _rational_candidates(semi))
    if e is not None:
        return e
    raise SearchExhausted(
        "could not find an idempotent over the rationals; "
        "the algebra may be a division algebra")


def _finite_candidates(semi):
    n = semi.dim
    for i in range(n):
        yield semi.basis_element(i)
    F = semi.field
    for i in range(n):
        for j in range(i + 1, n):
            yield _vadd(F, semi.basis_element(i), semi.basis_element(j))
    for i in range(n):
        for j in range(n):
            if i != j:
                yield semi.mul(semi.basis_element(i), semi.basis_element(j))


def _rational_candidates(semi):
    F = semi.field
    Z = center(semi)
    zrows = [Z.rows[r] for r in range(Z.nrows)]
    for z in zrows:
        yield z
    for z in zrows:
        yield semi.mul(z, z)
    for a in zrows:
        for b in zrows:
            yield semi.mul(a, b)
    for z in zrows:
        yield _vadd(F, semi.unit, z)
        yield _vsub(F, semi.unit, z)
    for t in (1, 2, 3):
        ct = F.from_int(t)
        for a in zrows:
            for b in zrows:
                yield _vadd(F, _vscale(F, ct, a), b)
    for i in range(semi.dim):
        yield semi.basis_element(i)
    for i in range(semi.dim):
        for j in range(i + 1, semi.dim):
            yield _vadd(F, semi.basis_element(i), semi.basis_element(j))


def _scan_for_split(semi, candidates):
    for f in candidates:
        e = _split_from_element(semi, f)
        if e is not None:
            return e
    return None


def _lift_idempotent(algebra, e):
    """Newton step e <- 3e^2 - 2e^3 converges since e^2 - e is nilpotent."""
    F = algebra.field
    three = F.from_int(3)
    two = F.from_int(2)
    for _ in range(2 * algebra.dim + 8):
        e2 = algebra.mul(e, e)
        if e2 == e:
            return e
        e3 = algebra.mul(e2, e)
        e = _vsub(F, _vscale(F, three, e2), _vscale(F, two, e3))
    raise InvariantViolation("idempotent lift failed to converge")


def find_nontrivial_idempotent(algebra):
    """An idempotent outside {0, 1}, or None when the algebra is local.

    Raises SearchExhausted when neither outcome can be certified (this only
    happens over the rationals or for very large single-block quotients).
    """
    semi, qm = semisimple_quotient(algebra)
    ebar = _semisimple_nontrivial_idempotent(semi)
    if ebar is None:
        return None
    e = _lift_idempotent(algebra, qm.lift_vector(ebar))
    if e == algebra.zero_element() or e == algebra.unit:
        raise InvariantViolation("lift collapsed a nontrivial idempotent")
    return e


def primitive_idempotents(algebra):
    """Complete list of orthogonal primitive idempotents summing to 1.

    Deterministic: the worklist is FIFO and every split is produced by
    deterministic scans.
    """
    F = algebra.field
    pending = deque([algebra.unit])
    out = []
    steps = 0
    while pending:
        steps += 1
        if steps > 4 * algebra.dim + 16:
            raise InvariantViolation("idempotent splitting failed to terminate")
        e = pending.popleft()
        corner, embed = corner_algebra(algebra, e)
        fc = find_nontrivial_idempotent(corner)
        if fc is None:
            out.append(e)
            continue
        f = tuple((Matrix(F, [fc], corner.dim) * embed).rows[0])
        pending.append(f)
        pending.append(_vsub(F, e, f))
    total = algebra.zero_element()
    for e in out:
        if not _is_idempotent(algebra, e):
            raise InvariantViolation("non-idempotent in the primitive list")
        total = _vadd(F, total, e)
    if total != algebra.unit:
        raise InvariantViolation("primitive idempotents do not sum to 1")
    for a in range(len(out)):
        for b in range(len(out)):
            if a != b and algebra.mul(out[a], out[b]) != algebra.zero_element():
                raise InvariantViolation("primitive idempotents not orthogonal")
    return out


class QuiverPresentation:
    """A quiver with relations.

    arrows: sequence of (name, source, target).
    relations: each relation is a list of (coefficient, path) terms where a
    path is a tuple of arrow names in travel order (first arrow first).
    nilpotency: optional N; the result is the path algebra modulo the
    relations plus all paths of length >= N.
    """

    def __init__(self, field, vertices, arrows, relations=(), nilpotency=None):
        self.field = field
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        self.arrows = tuple((str(n), str(s), str(t)) for n, s, t in arrows)
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vset = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vset or t not in vset:
                raise ValueError(f"arrow {name} has undeclared endpoint")
        self.relations = tuple(tuple((c, tuple(p)) for c, p in rel)
                               for rel in relations)
        if nilpotency is not None and nilpotency < 2:
            raise NotAdmissible("nilpotency bound must be at least 2")
        self.nilpotency = nilpotency

    def arrow_index(self, name):
        for i, (n, _s, _t) in enumerate(self.arrows):
            if n == name:
                return i
        raise ValueError(f"unknown arrow {name!r}")

    def has_cycle(self):
        # Kahn's algorithm; self loops count
        indeg = {v: 0 for v in self.vertices}
        for _n, _s, t in self.arrows:
            indeg[t] += 1
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for _n, s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        queue.append(t)
        return seen != len(self.vertices)


MAX_PATHS = 10000


def from_path_algebra(pres, max_paths=MAX_PATHS):
    """Quotient of a path algebra by relations (and a nilpotency truncation).

    Works inside the span of paths of length < N and drops longer products,
    which is exactly multiplication in kQ / J^N.  The relation ideal is
    closed under arrow multiplication on both sides; admissibility keeps all
    relation terms parallel, so closing under arrows suffices for a two
    sided ideal.
    """
    F = pres.field
    N = pres.nilpotency
    if N is None and pres.has_cycle():
        raise NotAdmissible("cyclic quiver needs a nilpotency bound")

    arrows = pres.arrows
    by_source = {}
    for idx, (_n, s, _t) in enumerate(arrows):
        by_source.setdefault(s, []).append(idx)

    # paths stored as (source, target, arrow index tuple); trivial paths have
    # an empty arrow tuple, so lookup keys carry the source as well
    paths = []
    key_to_idx = {}

    def add_path(src, tgt, word):
        if len(paths) >= max_paths:
            raise ResourceLimit(f"more than {max_paths} paths")
        key_to_idx[(src, word)] = len(paths)
        paths.append((src, tgt, word))

    for v in pres.vertices:
        add_path(v, v, ())
    frontier = list(range(len(paths)))
    length = 0
    while frontier:
        length += 1
        if N is not None and length >= N:
            break
        nxt = []
        for pi in frontier:
            src, tgt, word = paths[pi]
            for ai in by_source.get(tgt, ()):
                add_path(src, arrows[ai][2], word + (ai,))
                nxt.append(len(paths) - 1)
        frontier = nxt

    npaths = len(paths)

    def concat(i, j):
        si, ti, wi = paths[i]
        sj, tj, wj = paths[j]
        if ti != sj:
            return None
        return key_to_idx.get((si, wi + wj))

    def mul_vec_by_arrow(vec, ai, on_left):
        out = [F.zero] * npaths
        aname, asrc, atgt = arrows[ai]
        for idx, c in enumerate(vec):
            if c == F.zero:
                continue
            src, tgt, word = paths[idx]
            if on_left:
                if atgt != src:
                    continue
                new = key_to_idx.get((asrc, (ai,) + word))
            else:
                if tgt != asrc:
                    continue
                new = key_to_idx.get((src, word + (ai,)))
            if new is not None:
                out[new] = F.add(out[new], c)
        return tuple(out)

    # relation vectors, with admissibility checks
    ideal = EchelonSpan(F, npaths)
    worklist = deque()
    for rel in pres.relations:
        vec = [F.zero] * npaths
        sig = None
        for coeff, names in rel:
            if len(names) < 2:
                raise NotAdmissible("relation term shorter than two arrows")
            word = tuple(pres.arrow_index(nm) for nm in names)
            src = arrows[word[0]][1]
            cur = arrows[word[0]][2]
            for ai in word[1:]:
                if arrows[ai][1] != cur:
                    raise NotAdmissible("relation term is not a composable path")
                cur = arrows[ai][2]
            if sig is None:
                sig = (src, cur)
            elif sig != (src, cur):
                raise NotAdmissible("relation terms are not parallel")
            idx = key_to_idx.get((src, word))
            if idx is not None:
                vec[idx] = F.add(vec[idx], coeff)
        v = tuple(vec)
        if ideal.insert(v):
            worklist.append(v)
    while worklist:
        v = worklist.popleft()
        for ai in range(len(arrows)):
            for on_left in (True, False):
                w = mul_vec_by_arrow(v, ai, on_left)
                if ideal.insert(w):
                    worklist.append(w)

    # every ideal vector is supported on paths of length >= 2, so trivial
    # paths and arrows always survive into the quotient
    for piv in ideal.pivot_columns():
        if len(paths[piv][2]) < 2:
            raise InvariantViolation("relation ideal touched a short path")

    qm = QuotientMap(ideal)
    m = qm.dim
    mult = []
    for i in range(m):
        pi = qm.free_cols[i]
        row = []
        for j in range(m):
            pj = qm.free_cols[j]
            idx = concat(pi, pj)
            if idx is None:
                row.append((F.zero,) * m)
            else:
                vec = tuple(F.one if t == idx else F.zero for t in range(npaths))
                row.append(qm.project_vector(vec))
        mult.append(row)
    # trivial paths occupy the first len(vertices) slots in declaration order
    unit_vec = [F.zero] * npaths
    for i in range(len(pres.vertices)):
        unit_vec[i] = F.one
    unit = qm.project_vector(tuple(unit_vec))

    def path_label(idx):
        src, _tgt, word = paths[idx]
        if not word:
            return f"e_{src}"
        return "*".join(arrows[ai][0] for ai in word)

    labels = tuple(path_label(c) for c in qm.free_cols)
    out = Algebra(F, mult, unit, labels=labels, validate=False)
    # trivial paths and arrows generate; downstream intertwiner solving only
    # needs to constrain against these
    out._cache["generators"] = tuple(
        i for i, c in enumerate(qm.free_cols) if len(paths[c][2]) <= 1)
    return out
