"""Left and right degrees of morphisms, and the theorem verifiers built on them.

The left degree of a nonzero morphism f of depth d is the least level m at
which composition with f fails to be injective on some graded hom quotient
rad^m/rad^{m+1}(Z, source), with Z running over the catalogue; the right
degree is the post-composition analogue.  Everything else in this module is
report machinery: each verifier checks the hypotheses of one statement about
degrees on a concrete fixture, checks its conclusions, and returns a
TheoremReport whose verdict separates "verified" and "hypothesis not met"
from genuine violations (which, since the statements are proved, indicate a
bug in this library and abort the caller).

Verdict semantics: a hypothesis clause with passed=None is one the machine
cannot decide; conclusion failures under such a hypothesis downgrade to
hypothesis-not-met instead of VIOLATION.  A conclusion clause with
passed=None is not applicable to the fixture and is skipped.
"""

import itertools
import math
from collections import namedtuple

from .errors import (
    InvariantViolation,
    NotIrreducible,
    SearchExhausted,
    ZeroMorphism,
)
from .linalg import EchelonSpan, Matrix, QuotientMap
from .algebra import semisimple_quotient
from .modules import (
    Morphism,
    _unvec,
    _vec,
    compose,
    decompose,
    direct_sum,
    endo_algebra,
    endo_element_matrix,
    find_isomorphism,
    identity_morphism,
    is_epi,
    is_indecomposable,
    is_injective,
    is_isomorphic,
    is_mono,
    is_projective,
    is_simple,
    kernel,
    quotient_module,
    radical_submodule,
    residue_division_algebra,
    socle,
)
from .ar import almost_split_sequence


DegreeWitness = namedtuple("DegreeWitness",
                           ["member", "g", "g_depth", "composite_depth"])
DegreeWitness.__doc__ = """Certificate for a finite degree value.

member is the catalogue index of Z, g the morphism out of (into) Z of depth
exactly g_depth = m, and composite_depth >= m + d + 1 records the depth of
the composite with f (math.inf when the composite vanishes)."""

DegreeReport = namedtuple("DegreeReport",
                          ["description", "depth", "side", "value", "bound",
                           "witness"])
DegreeReport.__doc__ = """Outcome of a degree scan.

value is an integer or math.inf; an infinite value means no kernel appeared
at any level below the recorded nilpotency bound, which over a complete
catalogue is the same as a truly infinite degree.  witness is a
DegreeWitness when the value is finite, else None."""

Clause = namedtuple("Clause", ["name", "passed", "data"])
Clause.__doc__ = """One checked statement inside a report.

passed is True, False, or None; None means unchecked for a hypothesis and
not-applicable for a conclusion."""

TheoremReport = namedtuple("TheoremReport",
                           ["theorem", "fixture", "hypotheses", "conclusions",
                            "verdict"])

KernelGrading = namedtuple("KernelGrading", ["kernel", "groups"])
KernelGrading.__doc__ = """Kernel of a morphism split by inclusion depth.

groups is a tuple of (m, parts) pairs sorted by m, where parts lists
(summand, composed inclusion into the source) and every composed inclusion
has depth exactly m.  The inclusion of a nonzero summand is mono, so no
depth is infinite: the deepest possible grade is one below the nilpotency
bound."""

KernelPath = namedtuple("KernelPath", ["labels", "morphisms", "composite"])


def _verdict(hypotheses, conclusions):
    if any(h.passed is False for h in hypotheses):
        return "hypothesis-not-met"
    if any(c.passed is False for c in conclusions):
        if any(h.passed is None for h in hypotheses):
            return "hypothesis-not-met"
        return "VIOLATION"
    return "verified"


def _fmt(value):
    return "infinite" if value is math.inf else str(value)


def _side_desc(table, module):
    parts = table._resolve(module)
    if not parts:
        return "0"
    return " + ".join(table.catalogue.labels[t] for t, _i, _p in parts)


def _describe(table, f):
    return f"{_side_desc(table, f.source)} -> {_side_desc(table, f.target)}"


# -- the degree scan ---------------------------------------------------------

def left_degree(table, f):
    """Least level where pre-composition with f kills a graded class."""
    return _degree(table, f, "left")


def right_degree(table, f):
    """Least level where post-composition with f kills a graded class."""
    return _degree(table, f, "right")


def _degree(table, f, side):
    d = table.depth(f)
    if d is math.inf:
        raise ZeroMorphism("the zero morphism has no degree")
    desc = _describe(table, f)
    # the domain quotient vanishes from level N on, so the scan stops there;
    # levels where only the target quotient vanishes stay in range because a
    # nonzero class killed by f is a kill like any other
    for m in range(table.N):
        for zi in range(len(table.catalogue)):
            mat = table.graded_map(f, zi, m, side)
            if mat.nrows == 0:
                continue
            ker = mat.left_kernel()
            if ker.nrows == 0:
                continue
            witness = _witness_from_coords(table, f, side, m, zi, ker.rows[0])
            return DegreeReport(desc, d, side, m, table.N, witness)
    return DegreeReport(desc, d, side, math.inf, table.N, None)


def _witness_from_coords(table, f, side, m, zi, coords):
    # rebuild the morphism behind a kernel row of the graded map; the row is
    # indexed by the canonical graded bases of the endpoint components in
    # resolution order, matching graded_map
    F = table.catalogue.algebra.field
    members = table.catalogue.members
    Z = members[zi]
    parts = table._resolve(f.source if side == "left" else f.target)
    total = None
    pos = 0
    for t, incl, proj in parts:
        if side == "left":
            reps = table._graded_reps(m, zi, t)
            nr, nc = Z.dim, members[t].dim
        else:
            reps = table._graded_reps(m, t, zi)
            nr, nc = members[t].dim, Z.dim
        block = list(coords[pos:pos + len(reps)])
        pos += len(reps)
        if all(x == F.zero for x in block):
            continue
        vec = [F.zero] * (nr * nc)
        for c, rep in zip(block, reps):
            if c == F.zero:
                continue
            vec = [F.add(v, F.mul(c, r)) for v, r in zip(vec, rep)]
        mat = _unvec(F, vec, nr, nc)
        if side == "left":
            piece = Morphism(Z, members[t], mat, validate=False)
            term = compose(piece, incl)
        else:
            piece = Morphism(members[t], Z, mat, validate=False)
            term = compose(proj, piece)
        total = term if total is None else total + term
    if total is None:
        raise InvariantViolation("kernel row rebuilt to the zero morphism")
    gd = table.depth(total)
    comp = compose(total, f) if side == "left" else compose(f, total)
    cd = table.depth(comp)
    if gd != m or cd < m + table.depth(f) + 1:
        raise InvariantViolation("degree witness fails its depth bounds")
    return DegreeWitness(zi, total, gd, cd)


# -- free irreducibility -----------------------------------------------------

def _residue_representatives(m):
    """Endomorphisms of m lifting a basis of End(m) modulo its radical."""
    E, _mats = endo_algebra(m)
    quo, qm = semisimple_quotient(E)
    F = E.field
    out = []
    for i in range(quo.dim):
        unit = tuple(F.one if t == i else F.zero for t in range(quo.dim))
        coeffs = tuple(qm.lift_vector(unit))
        out.append(Morphism(m, m, endo_element_matrix(m, coeffs),
                            validate=False))
    return out


def freely_irreducible_check(table, f):
    """Whether the component residue classes of f form free generator tuples.

    For f: X -> sum of Y_i^{n_i} with X a catalogue member (or the dual
    shape with indecomposable target), the classes of the components into
    each iso-class Y_i must be independent even after multiplying by residue
    division ring elements on both sides.  Decided by base-field linear
    algebra in irr(X, Y_i).
    """
    if table.depth(f) != 1:
        raise NotIrreducible("freeness is defined for depth one morphisms")
    src = table._resolve(f.source)
    tgt = table._resolve(f.target)
    if len(src) != 1 and len(tgt) != 1:
        raise NotIrreducible("one endpoint must be a single member")
    members = table.catalogue.members
    F = table.catalogue.algebra.field
    groups = {}
    if len(src) == 1:
        a, ia, _pa = src[0]
        for b, _ib, pb in tgt:
            groups.setdefault(b, []).append(compose(compose(ia, f), pb))
        pairs = {b: (a, b) for b in groups}
    else:
        b, _ib, pb = tgt[0]
        for a, ia, _pa in src:
            groups.setdefault(a, []).append(compose(compose(ia, f), pb))
        pairs = {a: (a, b) for a in groups}
    for t in sorted(groups):
        i, j = pairs[t]
        space = table.irr_space(i, j)
        span = EchelonSpan(F, space.dim)
        for h in groups[t]:
            for u in _residue_representatives(members[i]):
                for v in _residue_representatives(members[j]):
                    w = u.matrix * h.matrix * v.matrix
                    coords = table._graded_coords(1, i, j, _vec(w))
                    if not span.insert(coords):
                        return False
    return True


# -- kernel gradings and the exact sequence ----------------------------------

def depth_graded_kernel_decomposition(table, f):
    """Split Ker(f) into indecomposables grouped by inclusion depth."""
    K, kincl = kernel(f)
    if K.dim == 0:
        return KernelGrading(K, ())
    groups = {}
    for sub, incl, _proj in decompose(K):
        inc = compose(incl, kincl)
        groups.setdefault(table.depth(inc), []).append((sub, inc))
    return KernelGrading(K, tuple((m, tuple(groups[m]))
                                  for m in sorted(groups)))


def _sequence_cell(table, pieces, f, zi, ell):
    # alpha stacks the graded maps of the composed inclusions, grade m
    # contributing from level ell - m; its columns live in the same
    # canonical graded basis as the rows of beta
    F = table.catalogue.algebra.field
    beta = table.graded_map(f, zi, ell)
    rows = []
    for m, inc in pieces:
        if m > ell:
            continue
        block = table.graded_map(inc, zi, ell - m)
        rows.extend(list(r) for r in block.rows)
    return Matrix(F, rows, ncols=beta.nrows), beta


def _cell_status(alpha, beta):
    inj = alpha.rank() == alpha.nrows
    kb = beta.left_kernel()
    image = EchelonSpan.from_rows(alpha.field, alpha.ncols, alpha.rows)
    ker = EchelonSpan.from_rows(beta.field, beta.nrows, kb.rows)
    same = image.basis_matrix().rows == ker.basis_matrix().rows
    return inj, same, kb.nrows


def graded_kernel_sequence_report(table, f, ell_range=None, fixture=""):
    """Exactness of the graded kernel sequence, cell by cell.

    For each member Z and each level l the sequence sends the graded hom
    spaces into the kernel summands (shifted by their grades) into
    rad^l/rad^{l+1}(Z, source) and on into level l + depth(f) of the target.
    Each cell reports injectivity of the first map and image-equals-kernel
    at the middle term.  The default level range starts at the least kernel
    grade (0 for a monomorphism) and stops where the target level reaches
    the nilpotency bound.
    """
    d = table.depth(f)
    if d is math.inf:
        raise ZeroMorphism("the zero morphism has no kernel sequence")
    grading = depth_graded_kernel_decomposition(table, f)
    pieces = [(m, inc) for m, group in grading.groups for _sub, inc in group]
    if ell_range is None:
        start = grading.groups[0][0] if grading.groups else 0
        ell_range = range(start, table.N - d + 1)
    hyps = [
        Clause("morphism is nonzero", True, f"depth {d}"),
        Clause("graded pieces of the kernel generate the graded kernel",
               None, "not machine-checked; exactness below is the evidence"),
    ]
    conclusions = []
    c = table.catalogue
    for ell in ell_range:
        for zi in range(len(c)):
            alpha, beta = _sequence_cell(table, pieces, f, zi, ell)
            inj, same, kdim = _cell_status(alpha, beta)
            data = (f"dims {alpha.nrows} -> {beta.nrows} -> {beta.ncols}, "
                    f"rank {alpha.rank()}, kernel {kdim}")
            conclusions.append(Clause(
                f"exact at Z={c.labels[zi]} level {ell}", inj and same, data))
    return TheoremReport("graded-kernel-sequence", fixture, tuple(hyps),
                         tuple(conclusions), _verdict(hyps, conclusions))


# -- the kernel theorem for finite left degree -------------------------------

def _irreducibility_hypotheses(table, f):
    d = table.depth(f)
    src = table._resolve(f.source)
    tgt = table._resolve(f.target)
    hyps = [
        Clause("depth exactly one (irreducible)", d == 1, f"depth {_fmt(d)}"),
        Clause("an endpoint is indecomposable",
               len(src) == 1 or len(tgt) == 1,
               f"source {len(src)} summand(s), target {len(tgt)}"),
    ]
    return hyps, all(h.passed for h in hyps)


def theorem_b_report(table, f, fixture=""):
    """Kernel clauses for an irreducible morphism of finite left degree.

    Checks that the kernel inclusion depth equals the degree n, that the
    inclusion arises as a composite of n irreducibles found by path search,
    and that the graded kernel sequence is exact at every level from n up to
    the nilpotency bound, for every member Z.  When f is not freely
    irreducible the statements hold for some depth-two adjustment of f which
    is not constructed here; the checks then run against f itself and any
    failure is inconclusive rather than a violation.
    """
    hyps, ok = _irreducibility_hypotheses(table, f)
    if not ok:
        return TheoremReport("B", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    rep = left_degree(table, f)
    n = rep.value
    hyps.append(Clause("left degree is finite", n is not math.inf,
                       f"left degree {_fmt(n)} at bound {rep.bound}"))
    if n is math.inf:
        return TheoremReport("B", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    if freely_irreducible_check(table, f):
        hyps.append(Clause("freely irreducible", True,
                           "residue multiples of the components independent"))
    else:
        hyps.append(Clause("freely irreducible [not machine-checked]", None,
                           "residue classes not free; conclusions checked "
                           "against f itself"))
    conclusions = []
    K, kincl = kernel(f)
    if K.dim == 0:
        conclusions.append(Clause("kernel is nonzero", False,
                                  "finite left degree forces a kernel"))
        return TheoremReport("B", fixture, tuple(hyps), tuple(conclusions),
                             _verdict(hyps, conclusions))
    kd = table.depth(kincl)
    conclusions.append(Clause("kernel inclusion depth equals the left degree",
                              kd == n, f"inclusion depth {_fmt(kd)}, degree {n}"))
    try:
        path = find_kernel_path(table, f)
        conclusions.append(Clause(
            f"kernel inclusion is a composite of {n} irreducibles", True,
            " -> ".join(path.labels)))
    except SearchExhausted as exc:
        conclusions.append(Clause(
            f"kernel inclusion is a composite of {n} irreducibles", False,
            str(exc)))
    grading = depth_graded_kernel_decomposition(table, f)
    pieces = [(m, inc) for m, group in grading.groups for _sub, inc in group]
    c = table.catalogue
    for ell in range(n, table.N):
        all_ok = True
        cells = []
        for zi in range(len(c)):
            alpha, beta = _sequence_cell(table, pieces, f, zi, ell)
            inj, same, kdim = _cell_status(alpha, beta)
            all_ok = all_ok and inj and same
            cells.append(f"{c.labels[zi]}:{alpha.nrows}/{beta.nrows}/{kdim}")
        conclusions.append(Clause(f"sequence exact at level {ell}", all_ok,
                                  "dom/mid/ker " + " ".join(cells)))
    return TheoremReport("B", fixture, tuple(hyps), tuple(conclusions),
                         _verdict(hyps, conclusions))


def degree_kernel_equivalence_check(table, f, fixture=""):
    """Left degree equals kernel inclusion depth, both sides independent.

    The degree comes from the graded scan, the inclusion depth from span
    membership; for a monomorphism both sides are reported infinite.
    Requires free irreducibility, where the equivalence is unconditional.
    """
    hyps, ok = _irreducibility_hypotheses(table, f)
    if ok:
        free = freely_irreducible_check(table, f)
        hyps.append(Clause("freely irreducible", free,
                           "residue multiple independence"))
        ok = ok and free
    if not ok:
        return TheoremReport("degree-kernel", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    dl = left_degree(table, f).value
    _K, kincl = kernel(f)
    kd = table.depth(kincl)
    conclusions = [Clause("left degree equals kernel inclusion depth",
                          dl == kd,
                          f"degree {_fmt(dl)}, inclusion depth {_fmt(kd)}")]
    return TheoremReport("degree-kernel", fixture, tuple(hyps),
                         tuple(conclusions), _verdict(hyps, conclusions))


def mono_epi_degree_check(table, f, fixture=""):
    """Finite left degree picks out epis, finite right degree monos."""
    hyps, ok = _irreducibility_hypotheses(table, f)
    if not ok:
        return TheoremReport("mono-epi", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    dl = left_degree(table, f).value
    dr = right_degree(table, f).value
    epi = is_epi(f)
    mono = is_mono(f)
    lf = dl is not math.inf
    rf = dr is not math.inf
    conclusions = [
        Clause("left degree finite iff epimorphism", lf == epi,
               f"left degree {_fmt(dl)}, epi {epi}"),
        Clause("right degree finite iff monomorphism", rf == mono,
               f"right degree {_fmt(dr)}, mono {mono}"),
        Clause("degrees are not both finite", not (lf and rf),
               f"left {_fmt(dl)}, right {_fmt(dr)}"),
        Clause("degrees are not both infinite", lf or rf,
               f"left {_fmt(dl)}, right {_fmt(dr)}"),
    ]
    return TheoremReport("mono-epi", fixture, tuple(hyps),
                         tuple(conclusions), _verdict(hyps, conclusions))


def degree_shift_check(table, m, fixture=""):
    """Degree drop across the almost split sequence ending at a member.

    For the sequence 0 -> T -> E -> m -> 0 and each indecomposable summand
    X of E with nonzero complement X', the component f: X -> m and the
    complement component g: T -> X' satisfy d_l(g) = d_l(f) - 1, infinite
    degrees matching.
    """
    c = table.catalogue
    hyps = [Clause("target is not projective", not is_projective(m),
                   f"dim {m.dim}")]
    if is_projective(m):
        return TheoremReport("shift", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    seq = almost_split_sequence(m, c)
    parts = decompose(seq.middle)
    hyps.append(Clause("middle term decomposes", len(parts) >= 2,
                       f"{len(parts)} summand(s)"))
    if len(parts) < 2:
        return TheoremReport("shift", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    conclusions = []
    for idx, (sub, incl, _prj) in enumerate(parts):
        f = compose(incl, seq.project)
        rest = [p for j, p in enumerate(parts) if j != idx]
        xprime, xincls, _xprojs = direct_sum([s for s, _i, _p in rest])
        tox = None
        for (osub, _oincl, oprj), xinc in zip(rest, xincls):
            term = compose(oprj, xinc)
            tox = term if tox is None else tox + term
        g = compose(seq.inject, tox)
        label = c.labels[c.find_isomorphic(sub)]
        if g.is_zero():
            conclusions.append(Clause(
                f"degree shift at summand {label}", False,
                "component into the complement is zero"))
            continue
        dlf = left_degree(table, f).value
        dlg = left_degree(table, g).value
        conclusions.append(Clause(
            f"degree shift at summand {label}", dlg == dlf - 1,
            f"component degree {_fmt(dlf)}, complement degree {_fmt(dlg)}"))
    return TheoremReport("shift", fixture, tuple(hyps), tuple(conclusions),
                         _verdict(hyps, conclusions))


def kernel_iso_check(table, f1, f2, fixture=""):
    """Parallel irreducibles share degree and kernel when a residue is trivial."""
    c = table.catalogue
    members = c.members
    hyps = [Clause("morphisms are parallel",
                   f1.source is f2.source and f1.target is f2.target,
                   _describe(table, f1))]
    d1, d2 = table.depth(f1), table.depth(f2)
    hyps.append(Clause("both have depth exactly one", d1 == 1 and d2 == 1,
                       f"depths {_fmt(d1)}, {_fmt(d2)}"))
    src = table._resolve(f1.source)
    tgt = table._resolve(f1.target)
    trivial = False
    where = "no indecomposable endpoint with trivial residue ring"
    if len(src) == 1:
        dim = residue_division_algebra(members[src[0][0]]).dim
        if dim == 1:
            trivial, where = True, f"source residue dimension {dim}"
        else:
            where = f"source residue dimension {dim}"
    if not trivial and len(tgt) == 1:
        dim = residue_division_algebra(members[tgt[0][0]]).dim
        if dim == 1:
            trivial, where = True, f"target residue dimension {dim}"
        else:
            where += f"; target residue dimension {dim}"
    hyps.append(Clause("an indecomposable endpoint has trivial residue ring",
                       trivial, where))
    if not all(h.passed for h in hyps):
        return TheoremReport("kernel-iso", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    dl1 = left_degree(table, f1).value
    hyps.append(Clause("first morphism has finite left degree",
                       dl1 is not math.inf, f"left degree {_fmt(dl1)}"))
    if dl1 is math.inf:
        return TheoremReport("kernel-iso", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    dl2 = left_degree(table, f2).value
    K1, _i1 = kernel(f1)
    K2, _i2 = kernel(f2)
    phi = find_isomorphism(K1, K2) if K1.dim == K2.dim else None
    conclusions = [
        Clause("left degrees are equal", dl1 == dl2,
               f"degrees {_fmt(dl1)}, {_fmt(dl2)}"),
        Clause("kernels are isomorphic", phi is not None,
               f"kernel dimensions {K1.dim}, {K2.dim}" +
               ("; isomorphism constructed" if phi is not None else "")),
    ]
    return TheoremReport("kernel-iso", fixture, tuple(hyps),
                         tuple(conclusions), _verdict(hyps, conclusions))


# -- finite representation type characterization -----------------------------

def irreducible_sweep(table):
    """Deduplicated irreducible morphisms with an indecomposable endpoint.

    Irr space bases cover the maps between members; an almost split map,
    radical inclusion or socle quotient joins the list only when its far
    endpoint is decomposable, since with an indecomposable far endpoint it
    coincides with a member-to-member irreducible the bases already carry.
    """
    c = table.catalogue
    reps = []
    for i in range(len(c)):
        for j in range(len(c)):
            for k, b in enumerate(table.irr_space(i, j).basis):
                reps.append((f"irr {c.labels[i]} -> {c.labels[j]} [{k}]", b))
    for i, m in enumerate(c.members):
        if not is_projective(m):
            seq = almost_split_sequence(m, c)
            if not is_indecomposable(seq.middle):
                reps.append((f"almost split projection onto {c.labels[i]}",
                             seq.project))
                reps.append((f"almost split injection from translate of "
                             f"{c.labels[i]}", seq.inject))
        if is_projective(m):
            r, rincl = radical_submodule(m)
            if r.dim and not is_indecomposable(r):
                reps.append((f"radical inclusion into {c.labels[i]}", rincl))
        if is_injective(m):
            s, sincl = socle(m)
            if s.dim < m.dim:
                q, qmap = quotient_module(m, sincl.matrix.rows)
                if not is_indecomposable(q):
                    reps.append((f"socle quotient of {c.labels[i]}", qmap))
    return reps


def _representative_morphisms(table):
    """Canonical irreducible morphisms of the catalogue.

    Basis elements of every irreducible space, both maps of every almost
    split sequence, every radical inclusion of a projective member, and
    every socle quotient of an injective member.
    """
    c = table.catalogue
    reps = []
    for i in range(len(c)):
        for j in range(len(c)):
            for k, b in enumerate(table.irr_space(i, j).basis):
                reps.append((f"irr {c.labels[i]} -> {c.labels[j]} [{k}]", b))
    for i, m in enumerate(c.members):
        if not is_projective(m):
            seq = almost_split_sequence(m, c)
            reps.append((f"almost split projection onto {c.labels[i]}",
                         seq.project))
            reps.append((f"almost split injection from translate of "
                         f"{c.labels[i]}", seq.inject))
        if is_projective(m):
            r, rincl = radical_submodule(m)
            if r.dim:
                reps.append((f"radical inclusion into {c.labels[i]}", rincl))
        if is_injective(m):
            s, sincl = socle(m)
            if s.dim < m.dim:
                _q, qmap = quotient_module(m, sincl.matrix.rows)
                reps.append((f"socle quotient of {c.labels[i]}", qmap))
    return reps


def finite_type_report(table, fixture=""):
    """Degree finiteness clauses available when the catalogue is complete.

    Radical inclusions have finite right degree, socle quotients finite left
    degree, canonical irreducible epis (monos) finite left (right) degree,
    and the maxima over epis and monos are attained at a socle quotient and
    a radical inclusion respectively.
    """
    c = table.catalogue
    hyps = [Clause("catalogue lists every indecomposable once", True,
                   "certified separately by the completeness check")]
    conclusions = []
    rad_incls, soc_quots, epis, monos = [], [], [], []
    for name, g in _representative_morphisms(table):
        if name.startswith("radical inclusion"):
            rad_incls.append((name, g))
        if name.startswith("socle quotient"):
            soc_quots.append((name, g))
        if is_epi(g):
            epis.append((name, g))
        elif is_mono(g):
            monos.append((name, g))
    bad = [n for n, g in rad_incls
           if right_degree(table, g).value is math.inf]
    conclusions.append(Clause(
        "radical inclusions have finite right degree", not bad,
        f"{len(rad_incls)} checked" + (f"; infinite at {bad}" if bad else "")))
    bad = [n for n, g in soc_quots
           if left_degree(table, g).value is math.inf]
    conclusions.append(Clause(
        "socle quotients have finite left degree", not bad,
        f"{len(soc_quots)} checked" + (f"; infinite at {bad}" if bad else "")))
    epi_vals = [(left_degree(table, g).value, n) for n, g in epis]
    mono_vals = [(right_degree(table, g).value, n) for n, g in monos]
    bad = [n for v, n in epi_vals if v is math.inf]
    conclusions.append(Clause(
        "irreducible epimorphisms have finite left degree", not bad,
        f"{len(epis)} checked" + (f"; infinite at {bad}" if bad else "")))
    bad = [n for v, n in mono_vals if v is math.inf]
    conclusions.append(Clause(
        "irreducible monomorphisms have finite right degree", not bad,
        f"{len(monos)} checked" + (f"; infinite at {bad}" if bad else "")))
    if epi_vals and soc_quots:
        best = max(v for v, _n in epi_vals)
        soc_best = max(left_degree(table, g).value for _n, g in soc_quots)
        conclusions.append(Clause(
            "maximal left degree of an epi is attained at a socle quotient",
            best == soc_best,
            f"epi maximum {_fmt(best)}, socle quotient maximum {_fmt(soc_best)}"))
    else:
        conclusions.append(Clause(
            "maximal left degree of an epi is attained at a socle quotient",
            None, "no epimorphisms or no socle quotients in the catalogue"))
    if mono_vals and rad_incls:
        best = max(v for v, _n in mono_vals)
        rad_best = max(right_degree(table, g).value for _n, g in rad_incls)
        conclusions.append(Clause(
            "maximal right degree of a mono is attained at a radical inclusion",
            best == rad_best,
            f"mono maximum {_fmt(best)}, radical inclusion maximum {_fmt(rad_best)}"))
    else:
        conclusions.append(Clause(
            "maximal right degree of a mono is attained at a radical inclusion",
            None, "no monomorphisms or no radical inclusions in the catalogue"))
    return TheoremReport("finite-type", fixture, tuple(hyps),
                         tuple(conclusions), _verdict(hyps, conclusions))


def kernel_comparison_check(table, f, fixture=""):
    """Kernel constraints for an irreducible epi onto a two-summand target."""
    parts = decompose(f.target)
    if len(parts) != 2:
        raise ValueError("target must split into exactly two nonzero summands")
    c = table.catalogue
    d = table.depth(f)
    hyps = [
        Clause("source is indecomposable", len(table._resolve(f.source)) == 1,
               _side_desc(table, f.source)),
        Clause("depth exactly one (irreducible)", d == 1, f"depth {_fmt(d)}"),
        Clause("f is an epimorphism", is_epi(f),
               f"rank {f.matrix.rank()} of {f.target.dim}"),
    ]
    if not all(h.passed for h in hyps):
        return TheoremReport("kernel-comparison", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    K, _ki = kernel(f)
    conclusions = [Clause("kernel of f is not injective", not is_injective(K),
                          f"kernel dimension {K.dim}")]
    for pos, (_sub, _incl, prj) in enumerate(parts, start=1):
        fi = compose(f, prj)
        Ki, _kii = kernel(fi)
        conclusions.append(Clause(
            f"kernel of f differs from kernel of component {pos}",
            not (K.dim == Ki.dim and is_isomorphic(K, Ki)),
            f"dimensions {K.dim} and {Ki.dim}"))
        conclusions.append(Clause(
            f"kernel of component {pos} is not injective",
            not is_injective(Ki), f"dimension {Ki.dim}"))
        conclusions.append(Clause(
            f"kernel of component {pos} is not simple",
            not is_simple(Ki), f"dimension {Ki.dim}"))
        if is_projective(Ki):
            conclusions.append(Clause(
                f"almost split middle over kernel of component {pos} is "
                f"indecomposable", None, "kernel is projective; no sequence"))
        else:
            ks = almost_split_sequence(Ki, c)
            npieces = len(decompose(ks.middle))
            conclusions.append(Clause(
                f"almost split middle over kernel of component {pos} is "
                f"indecomposable", npieces == 1, f"{npieces} summand(s)"))
    return TheoremReport("kernel-comparison", fixture, tuple(hyps),
                         tuple(conclusions), _verdict(hyps, conclusions))


# -- path search -------------------------------------------------------------

def _combine(F, basis, coeffs):
    mat = Matrix.zero(F, basis[0].matrix.nrows, basis[0].matrix.ncols)
    for b, co in zip(basis, coeffs):
        if co != F.zero:
            mat = mat + b.matrix.scale(co)
    return Morphism(basis[0].source, basis[0].target, mat, validate=False)


def _hop_candidates(table, vi, target_parts):
    """Depth one morphisms from member vi into a resolved target.

    Single basis element when the irreducible space is one dimensional; all
    nonzero coefficient combinations when the field is small enough to
    enumerate them; otherwise basis elements and their pairwise sums.
    """
    F = table.catalogue.algebra.field
    basis = []
    for t, incl, _prj in target_parts:
        for b in table.irr_space(vi, t).basis:
            basis.append(compose(b, incl))
    if not basis:
        return ()
    if len(basis) == 1:
        return (basis[0],)
    if F.order is not None and F.order ** len(basis) <= 64:
        out = []
        for coeffs in itertools.product(tuple(F.elements()),
                                        repeat=len(basis)):
            if all(co == F.zero for co in coeffs):
                continue
            out.append(_combine(F, basis, coeffs))
        return tuple(out)
    out = list(basis)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            out.append(basis[a] + basis[b])
    return tuple(out)


def find_kernel_path(table, f):
    """A composite of irreducibles realizing the kernel inclusion of f.

    Depth-first search over catalogue vertices, candidate hops drawn from
    the canonical irreducible bases; a composite is accepted when it kills f
    and has rank equal to the kernel dimension, which makes it a mono onto
    the kernel.  Path length is the depth of the kernel inclusion.
    """
    if table.depth(f) != 1:
        raise NotIrreducible("kernel paths are built for depth one morphisms")
    K, kincl = kernel(f)
    if K.dim == 0:
        raise ValueError("a monomorphism has no kernel path")
    n = table.depth(kincl)
    c = table.catalogue
    ki = c.find_isomorphic(K)
    if ki is None:
        raise SearchExhausted("kernel has no isomorphic catalogue member")
    src_parts = table._resolve(f.source)
    final_label = _side_desc(table, f.source)

    def extend(v, composite, mors, labels):
        if len(mors) == n - 1:
            for cand in _hop_candidates(table, v, src_parts):
                total = cand if composite is None else compose(composite, cand)
                if total.is_zero():
                    continue
                if compose(total, f).is_zero() and \
                        total.matrix.rank() == K.dim:
                    return (mors + [cand], labels + [final_label], total)
            return None
        for w in range(len(c)):
            if table.irr_space(v, w).dim == 0:
                continue
            for cand in _hop_candidates(table, v,
                                        table._resolve(c.members[w])):
                total = cand if composite is None else compose(composite, cand)
                if total.is_zero():
                    continue
                hit = extend(w, total, mors + [cand], labels + [c.labels[w]])
                if hit is not None:
                    return hit
        return None

    hit = extend(ki, None, [], [c.labels[ki]])
    if hit is None:
        raise SearchExhausted(
            f"no composite of {n} irreducibles realizes the kernel inclusion")
    mors, labels, total = hit
    return KernelPath(tuple(labels), tuple(mors), total)


def _nonzero_path_exists(table, start, goal, length):
    """Whether some composite of irreducibles of given length is nonzero."""
    if length == 0:
        return start == goal
    c = table.catalogue

    def walk(v, composite, steps):
        if steps == length:
            return v == goal
        for w in range(len(c)):
            if table.irr_space(v, w).dim == 0:
                continue
            for cand in _hop_candidates(table, v, table._resolve(c.members[w])):
                total = cand if composite is None else compose(composite, cand)
                if total.is_zero():
                    continue
                if walk(w, total, steps + 1):
                    return True
        return False

    return walk(start, None, 0)


def _zero_parallel_path_exists(table, vertices):
    """Whether irreducibles along the given vertices compose to zero.

    Once a prefix composite vanishes any completion does, and the remaining
    hops are nonempty because the reference path exists.
    """
    def walk(pos, composite):
        if composite is not None and composite.is_zero():
            return True
        if pos == len(vertices) - 1:
            return False
        v, w = vertices[pos], vertices[pos + 1]
        target = table._resolve(table.catalogue.members[w])
        for cand in _hop_candidates(table, v, target):
            total = cand if composite is None else compose(composite, cand)
            if walk(pos + 1, total):
                return True
        return False

    return walk(0, None)


def _path_witness_search(table, path, prefixes, x0):
    """The factorization witness (t, h) through the kernel of a later step.

    For each eligible t the condition "prefix minus h composed with the
    kernel inclusion lies in rad^t" is linear in h, solved over the basis of
    the required radical span; the affine solution set is then scanned for a
    solution of depth exactly t - 1 - degree, which exists iff the base
    solution or some kernel direction leaves the next radical layer.
    """
    F = table.catalogue.algebra.field
    c = table.catalogue
    for t in range(1, len(path) + 1):
        dl = left_degree(table, path[t - 1]).value
        if dl is math.inf or dl > t - 1:
            continue
        K, kincl = kernel(path[t - 1])
        if K.dim == 0:
            continue
        ki = c.find_isomorphic(K)
        if ki is None:
            raise InvariantViolation("kernel missing from the catalogue")
        psi = find_isomorphism(c.members[ki], K)
        iprime = compose(psi, kincl)
        level = t - 1 - dl
        hspan = table.span(level, x0, ki)
        if hspan.dim == 0:
            continue
        hb = hspan.basis_matrix()
        xt1 = table.member_index(path[t - 1].source)
        hcands = [Morphism(c.members[x0], c.members[ki],
                           _unvec(F, list(r), c.members[x0].dim,
                                  c.members[ki].dim), validate=False)
                  for r in hb.rows]
        prefix = prefixes[t - 1]
        qm = QuotientMap(table.span(t, x0, xt1))
        if qm.dim == 0:
            sol = [F.zero] * len(hcands)
            null_rows = Matrix.identity(F, len(hcands)).rows
        else:
            rows = [qm.project_vector(_vec(compose(h, iprime).matrix))
                    for h in hcands]
            M = Matrix(F, rows, ncols=qm.dim)
            sol = M.solve_left(qm.project_vector(_vec(prefix.matrix)))
            if sol is None:
                continue
            null_rows = M.left_kernel().rows
        h0 = _combine(F, hcands, sol)
        if not h0.is_zero() and table.depth(h0) == level:
            return t, h0
        # the solution set is a coset; depth drops below level + 1 for some
        # solution iff it does for the base point or a kernel direction
        for nu in null_rows:
            hn = _combine(F, hcands, nu)
            cand = h0 + hn
            if not cand.is_zero() and table.depth(cand) == level:
                return t, cand
    return None


def path_composition_report(table, path, fixture=""):
    """Depth of a composite of irreducibles against its factorization criteria.

    (i) asks whether the composite of the n steps lies one layer deeper than
    its length.  (ii) searches for a step index t and a morphism h with the
    prefix congruent to h composed with the kernel inclusion of step t,
    modulo rad^t; this is equivalent to (i).  (iii) asks for a nonzero
    composite of irreducibles from the start into that kernel, of length
    t - 1 - degree, together with a zero-composition path along the same
    vertices; it follows from (ii), and implies (i) when the irreducible
    spaces along the first t steps are one dimensional.  The two remark
    clauses check the lower-bound criterion (prefixes that can never vanish
    plus fast-growing later degrees keep the composite shallow) and the
    one-dimensional zero-path criterion.
    """
    c = table.catalogue
    path = list(path)
    hyps = [Clause("path is nonempty", bool(path), f"{len(path)} step(s)")]
    if not path:
        return TheoremReport("C", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    vertices = []
    chained = True
    known = True
    for s, f in enumerate(path):
        if s == 0:
            vertices.append(f.source)
        elif f.source is not path[s - 1].target:
            chained = False
        vertices.append(f.target)
    hyps.append(Clause("consecutive endpoints agree", chained,
                       "composable chain" if chained else "broken chain"))
    vidx = []
    for m in vertices:
        i = next((k for k, mem in enumerate(c.members) if mem is m), None)
        if i is None:
            known = False
            break
        vidx.append(i)
    hyps.append(Clause("endpoints are catalogue members", known,
                       " -> ".join(c.labels[i] for i in vidx) if known
                       else "unknown module on the path"))
    depths_ok = chained and known and \
        all(table.depth(f) == 1 for f in path)
    hyps.append(Clause("every step has depth exactly one", depths_ok, ""))
    if not (chained and known and depths_ok):
        return TheoremReport("C", fixture, tuple(hyps), (),
                             "hypothesis-not-met")
    n = len(path)
    x0 = vidx[0]
    prefixes = [identity_morphism(c.members[x0])]
    for f in path:
        prefixes.append(compose(prefixes[-1], f))
    composite = prefixes[-1]
    di = table.depth(composite)
    i_holds = di is math.inf or di >= n + 1

    witness = _path_witness_search(table, path, prefixes, x0)
    ii_holds = witness is not None

    iii_witnesses = []
    for t in range(1, n + 1):
        dl = left_degree(table, path[t - 1]).value
        if dl is math.inf or dl > t - 1:
            continue
        K, _ki = kernel(path[t - 1])
        if K.dim == 0:
            continue
        ki = c.find_isomorphic(K)
        if ki is None:
            continue
        if not _nonzero_path_exists(table, x0, ki, t - 1 - dl):
            continue
        if not _zero_parallel_path_exists(table, vidx[:t + 1]):
            continue
        iii_witnesses.append(t)
    iii_holds = bool(iii_witnesses)

    conclusions = []
    if di is math.inf:
        wdata = f"composite is zero (depth infinite) over {n} step(s)"
    else:
        wdata = f"composite depth exactly {di} over {n} step(s)"
    if witness is not None:
        t, h = witness
        wdata += f"; witness t={t}, h depth {table.depth(h)}"
    free_steps = all(freely_irreducible_check(table, f) for f in path)
    if i_holds == ii_holds:
        conclusions.append(Clause("(i) iff (ii)", True, wdata))
    elif i_holds and not ii_holds and not free_steps:
        conclusions.append(Clause("(i) iff (ii)", None, wdata +
                                  "; a step is not freely irreducible, the "
                                  "adjusted kernels are out of reach"))
    else:
        conclusions.append(Clause("(i) iff (ii)", False, wdata))
    conclusions.append(Clause(
        "(ii) implies (iii)", (not ii_holds) or iii_holds,
        f"(iii) witnesses at t in {iii_witnesses}" if iii_witnesses
        else "no (iii) witness"))
    dims1 = [t for t in iii_witnesses
             if all(table.irr_space(vidx[s - 1], vidx[s]).dim == 1
                    for s in range(1, t + 1))]
    if dims1:
        conclusions.append(Clause(
            "(iii) implies (i) for one dimensional irreducible spaces",
            i_holds, f"witness t={dims1[0]}"))
    elif iii_witnesses:
        conclusions.append(Clause(
            "(iii) implies (i) for one dimensional irreducible spaces",
            None, "irreducible spaces along the witness prefix are larger"))
    else:
        conclusions.append(Clause(
            "(iii) implies (i) for one dimensional irreducible spaces",
            None, "no (iii) witness"))

    remark1_t = None
    for t in range(1, n + 1):
        if not all(left_degree(table, path[s - 1]).value >= s
                   for s in range(t + 1, n + 1)):
            continue
        if _zero_parallel_path_exists(table, vidx[:t + 1]):
            continue
        remark1_t = t
        break
    if remark1_t is None:
        conclusions.append(Clause(
            "nonzero-composition lower bound", None,
            "no prefix with all parallel composites nonzero and later "
            "degrees at least their index"))
    else:
        conclusions.append(Clause(
            "nonzero-composition lower bound", not i_holds,
            f"prefix length {remark1_t}, composite depth {_fmt(di)}"))

    zero_parallel = _zero_parallel_path_exists(table, vidx)
    zdata = ("a parallel zero-composition path exists" if zero_parallel
             else "no parallel zero-composition path")
    all_dims1 = all(table.irr_space(vidx[s - 1], vidx[s]).dim == 1
                    for s in range(1, n + 1))
    if zero_parallel and all_dims1:
        conclusions.append(Clause("one dimensional zero-path criterion",
                                  i_holds, zdata))
    else:
        conclusions.append(Clause(
            "one dimensional zero-path criterion", None,
            zdata + ("" if all_dims1
                     else "; irreducible spaces are not all one dimensional")))
    return TheoremReport("C", fixture, tuple(hyps), tuple(conclusions),
                         _verdict(hyps, conclusions))
