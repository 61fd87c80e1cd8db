"""Powers of the radical of a module category over a fixed catalogue.

The radical of the category assigns to each ordered pair (X, Y) of
indecomposables the space of non-isomorphisms when X and Y coincide and all
of Hom(X, Y) otherwise; its powers are ideal powers, built here by the
one-step recursion rad^{n+1}(X, Y) = sum over Z of rad^n(X, Z) o rad(Z, Y).
Everything is stored as echelon spans of row major flattened matrices, so
membership tests, graded quotients and the induced graded maps are exact
and reproducible.
"""

import math
import os
from collections import namedtuple

from .errors import InvariantViolation, RepInfiniteSuspected, ZeroMorphism
from .linalg import EchelonSpan, Matrix, solve_left_matrix
from .algebra import jacobson_radical
from .modules import (
    Morphism,
    _unvec,
    _vec,
    compose,
    decompose,
    endo_algebra,
    endo_element_matrix,
    find_isomorphism,
    hom_basis,
    identity_morphism,
    residue_division_algebra,
)

DEFAULT_CAP = 30

IrrSpace = namedtuple("IrrSpace", ["basis", "dim", "a", "b"])
IrrSpace.__doc__ = """Canonical basis of rad/rad^2(X, Y) with its valuations.

a is the dimension over the residue division ring of X (acting on the
left), b the dimension over the one of Y; both divide dim exactly.
"""


class RadicalTable:
    """rad^n(X, Y) for all ordered member pairs and all 0 <= n <= N.

    rad^0 is the full hom space, rad^N is zero, and the chain descends.
    The table assumes the catalogue is valid (members indecomposable and
    pairwise non-isomorphic); run validate_catalogue first on user input.
    Spans handed out by span() are shared and must not be mutated.
    """

    __slots__ = ("catalogue", "N", "_spans", "_resolutions", "_graded")

    def __init__(self, catalogue, N, spans):
        self.catalogue = catalogue
        self.N = N
        self._spans = spans
        self._resolutions = {}
        self._graded = {}

    # -- indexing helpers -------------------------------------------------

    def member_index(self, m):
        if isinstance(m, int):
            if not 0 <= m < len(self.catalogue):
                raise IndexError(f"no catalogue member at index {m}")
            return m
        for i, mem in enumerate(self.catalogue.members):
            if mem is m:
                return i
        raise ValueError("not a catalogue member; pass an index or the "
                         "member object itself")

    def span(self, n, i, j):
        """Echelon span of rad^n(X_i, X_j); zero for every n >= N."""
        i, j = self.member_index(i), self.member_index(j)
        if n < 0:
            raise ValueError("negative radical power")
        if n >= self.N:
            mem = self.catalogue.members
            return EchelonSpan(self.catalogue.algebra.field,
                               mem[i].dim * mem[j].dim)
        return self._spans[n][(i, j)]

    def dim(self, n, i, j):
        return self.span(n, i, j).dim

    def dimension_profile(self, i, j):
        """dim rad^n(X_i, X_j) for n = 0 .. N."""
        return tuple(self.dim(n, i, j) for n in range(self.N + 1))

    # -- resolving modules into catalogue components ----------------------

    def _resolve(self, module):
        """Components of a module as (index, incl, proj) triples.

        incl maps the member into the module and proj back, with proj after
        incl the identity of the member.  Members resolve to themselves;
        anything else is decomposed and iso-matched into the catalogue.
        """
        key = module._token
        cached = self._resolutions.get(key)
        if cached is not None:
            return cached
        c = self.catalogue
        out = None
        for i, mem in enumerate(c.members):
            if mem is module:
                one = identity_morphism(mem)
                out = ((i, one, one),)
                break
        if out is None:
            parts = []
            for sub, incl, proj in decompose(module):
                idx = c.find_isomorphic(sub)
                if idx is None:
                    raise InvariantViolation(
                        f"summand of dimension {sub.dim} is missing from "
                        "the catalogue")
                phi = find_isomorphism(c.members[idx], sub)
                ident = Matrix.identity(phi.matrix.field, phi.matrix.nrows)
                inv = Morphism(sub, c.members[idx],
                               solve_left_matrix(phi.matrix, ident),
                               validate=False)
                parts.append((idx, compose(phi, incl), compose(proj, inv)))
            out = tuple(parts)
        self._resolutions[key] = out
        return out

    # -- depth -------------------------------------------------------------

    def _component_depth(self, vec, i, j):
        # largest n with vec in rad^n; the vector is assumed nonzero, so the
        # climb stops strictly below N
        d = 0
        while d + 1 < self.N and self.span(d + 1, i, j).contains(vec):
            d += 1
        return d

    def depth(self, f):
        """Largest n with f in rad^n, or math.inf for the zero morphism.

        Decomposable endpoints are handled componentwise: the depth of f is
        the minimum over the depths of its member-to-member components.
        """
        if f.is_zero():
            return math.inf
        best = math.inf
        for a, ia, _pa in self._resolve(f.source):
            for b, _ib, pb in self._resolve(f.target):
                comp = compose(compose(ia, f), pb)
                if comp.is_zero():
                    continue
                best = min(best, self._component_depth(_vec(comp.matrix), a, b))
        return best

    # -- graded quotients --------------------------------------------------

    def _graded_reps(self, n, i, j):
        """Canonical representatives of rad^n/rad^{n+1}(X_i, X_j).

        The echelon basis of rad^{n+1} is extended to rad^n by inserting the
        echelon basis rows of rad^n in order; the rows that grow the span
        are the representatives.  Deterministic, hence reproducible.
        """
        key = (n, i, j)
        cached = self._graded.get(key)
        if cached is not None:
            return cached
        if n >= self.N:
            reps = ()
        else:
            big = self.span(n, i, j)
            small = self.span(n + 1, i, j)
            work = EchelonSpan.from_rows(big.field, big.ambient,
                                         small.basis_matrix().rows)
            reps = tuple(tuple(r) for r in big.basis_matrix().rows
                         if work.insert(r))
        self._graded[key] = reps
        return reps

    def _graded_coords(self, n, i, j, vec):
        """Coordinates of a rad^n element in the level n graded basis."""
        F = self.catalogue.algebra.field
        reps = self._graded_reps(n, i, j)
        if all(x == F.zero for x in vec):
            return [F.zero] * len(reps)
        rows = [list(r) for r in reps]
        rows.extend(self.span(n + 1, i, j).basis_matrix().rows)
        sol = Matrix(F, rows, ncols=len(vec)).solve_left(vec)
        if sol is None:
            raise InvariantViolation(
                f"element does not lie in radical layer {n}")
        return sol[:len(reps)]

    def irr_space(self, x, y):
        """rad/rad^2(X, Y) with its canonical basis and valuations."""
        i, j = self.member_index(x), self.member_index(y)
        X = self.catalogue.members[i]
        Y = self.catalogue.members[j]
        reps = self._graded_reps(1, i, j)
        if not reps:
            return IrrSpace((), 0, 0, 0)
        F = self.catalogue.algebra.field
        basis = tuple(Morphism(X, Y, _unvec(F, v, X.dim, Y.dim),
                               validate=False) for v in reps)
        d = len(reps)
        dx = residue_division_algebra(X).dim
        dy = residue_division_algebra(Y).dim
        if d % dx or d % dy:
            raise InvariantViolation(
                "irr dimension is not a multiple of the residue division "
                "ring dimensions")
        return IrrSpace(basis, d, d // dx, d // dy)

    def graded_map(self, f, z, level, side="left"):
        """Matrix of composition with f between graded hom quotients.

        For side "left" this is (-) o f on morphisms out of the member z,
        mapping rad^l/rad^{l+1}(Z, X) to rad^{l+d}/rad^{l+d+1}(Z, Y) where
        d is the depth of f; for side "right" it is f o (-) on morphisms
        into z, from rad^l/^{l+1}(Y, Z) to rad^{l+d}/^{l+d+1}(X, Z).  Rows
        follow the canonical graded basis of the source quotient,
        concatenated over endpoint components; levels at or past the
        nilpotency bound give zero dimensional spaces, so the matrix is
        total in l.
        """
        d = self.depth(f)
        if d is math.inf:
            raise ZeroMorphism("graded map needs a nonzero morphism")
        if level < 0:
            raise ValueError("negative level")
        zi = self.member_index(z)
        F = self.catalogue.algebra.field
        members = self.catalogue.members
        src = self._resolve(f.source)
        tgt = self._resolve(f.target)
        # components keyed by position: repeated summands of one member are
        # distinct components with distinct maps
        comps = [[compose(compose(ia, f), pb) for _b, _ib, pb in tgt]
                 for _a, ia, _pa in src]
        tlevel = level + d
        if side == "left":
            dom = [(p, a, self._graded_reps(level, zi, a))
                   for p, (a, _i, _pr) in enumerate(src)]
            cod = [(q, b, self._graded_reps(tlevel, zi, b))
                   for q, (b, _i, _pr) in enumerate(tgt)]
        elif side == "right":
            dom = [(q, b, self._graded_reps(level, b, zi))
                   for q, (b, _i, _pr) in enumerate(tgt)]
            cod = [(p, a, self._graded_reps(tlevel, a, zi))
                   for p, (a, _i, _pr) in enumerate(src)]
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        ncols = sum(len(reps) for _q, _t, reps in cod)
        Z = members[zi]
        rows = []
        for p, t, reps in dom:
            for v in reps:
                if side == "left":
                    g = _unvec(F, v, Z.dim, members[t].dim)
                else:
                    g = _unvec(F, v, members[t].dim, Z.dim)
                row = []
                for q, u, _creps in cod:
                    if side == "left":
                        img = g * comps[p][q].matrix
                        row.extend(self._graded_coords(
                            tlevel, zi, u, _vec(img)))
                    else:
                        img = comps[q][p].matrix * g
                        row.extend(self._graded_coords(
                            tlevel, u, zi, _vec(img)))
                rows.append(row)
        return Matrix(F, rows, ncols=ncols)

    # -- consistency checks -------------------------------------------------

    def verify(self):
        """Recheck the defining identities of the table.

        Descending chain, agreement of the left and right one-step
        recursions, and the full convolution identity
        rad^{a+b} = sum over Z of rad^a o rad^b for every split.
        Raises InvariantViolation on the first failure.
        """
        k = len(self.catalogue)
        for n in range(1, self.N + 1):
            for i in range(k):
                for j in range(k):
                    outer = self.span(n - 1, i, j)
                    for r in self.span(n, i, j).basis_matrix().rows:
                        if not outer.contains(r):
                            raise InvariantViolation(
                                f"rad^{n}({i},{j}) is not inside rad^{n - 1}")
        mem = self.catalogue.members
        for n in range(self.N + 1):
            for a in range(n + 1):
                b = n - a
                for i in range(k):
                    for j in range(k):
                        acc = EchelonSpan(self.catalogue.algebra.field,
                                          mem[i].dim * mem[j].dim)
                        for z in range(k):
                            left = _span_mats(self.span(a, i, z),
                                              mem[i].dim, mem[z].dim)
                            right = _span_mats(self.span(b, z, j),
                                               mem[z].dim, mem[j].dim)
                            for G in left:
                                for H in right:
                                    acc.insert(_vec(G * H))
                        if acc.basis_matrix() != self.span(n, i, j).basis_matrix():
                            raise InvariantViolation(
                                f"rad^{a} o rad^{b} differs from rad^{n} "
                                f"at pair ({i},{j})")


def _span_mats(span, nrows, ncols):
    F = span.field
    return [_unvec(F, tuple(r), nrows, ncols)
            for r in span.basis_matrix().rows]


def build_radical_table(catalogue, cap=None):
    """Compute rad^n for the catalogue until the powers vanish.

    N is the least n with rad^n = 0.  If rad^cap is still nonzero the
    algebra is suspected to be of infinite representation type and
    RepInfiniteSuspected is raised; the cap defaults to the RADDEG_CAP
    environment variable or 30.
    """
    if cap is None:
        cap = int(os.environ.get("RADDEG_CAP", DEFAULT_CAP))
    c = catalogue
    members = c.members
    if not members:
        raise ValueError("empty catalogue")
    F = c.algebra.field
    k = len(members)
    hom = {}
    for i in range(k):
        for j in range(k):
            span = EchelonSpan(F, members[i].dim * members[j].dim)
            for mor in hom_basis(members[i], members[j]):
                span.insert(_vec(mor.matrix))
            hom[(i, j)] = span
    rad1 = {}
    for i in range(k):
        for j in range(k):
            if i != j:
                # distinct members are non-isomorphic, so every morphism
                # between them is radical
                rad1[(i, j)] = hom[(i, j)]
            else:
                X = members[i]
                E, _mats = endo_algebra(X)
                J = jacobson_radical(E)
                span = EchelonSpan(F, X.dim * X.dim)
                for r in range(J.nrows):
                    span.insert(_vec(endo_element_matrix(X, tuple(J.rows[r]))))
                rad1[(i, j)] = span
    spans = [hom]
    n = 0
    while True:
        if all(s.dim == 0 for s in spans[-1].values()):
            return RadicalTable(c, n, spans)
        if n == cap:
            raise RepInfiniteSuspected(
                f"rad^{cap} is still nonzero; infinite representation type "
                "suspected (raise the cap via RADDEG_CAP if the algebra is "
                "genuinely of finite type)")
        if n == 0:
            spans.append(rad1)
        else:
            prev = spans[-1]
            nxt = {}
            for i in range(k):
                for j in range(k):
                    acc = EchelonSpan(F, members[i].dim * members[j].dim)
                    for z in range(k):
                        left = _span_mats(prev[(i, z)],
                                          members[i].dim, members[z].dim)
                        right = _span_mats(rad1[(z, j)],
                                           members[z].dim, members[j].dim)
                        for G in left:
                            for H in right:
                                acc.insert(_vec(G * H))
                    nxt[(i, j)] = acc
            spans.append(nxt)
        n += 1
