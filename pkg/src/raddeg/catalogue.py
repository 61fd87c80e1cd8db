"""Catalogues of indecomposable modules.

A catalogue lists, up to isomorphism, the indecomposable finite dimensional
right modules over a fixed algebra.  Everything downstream (radical tables,
the AR quiver, degree computations) quantifies over a catalogue, so the
constructors and the completeness check below are the gatekeepers for every
later theorem run.
"""

from .errors import InvariantViolation, NotNakayama, NotTypeA, WorkspaceError
from .linalg import Matrix
from .algebra import from_path_algebra
from .modules import (
    Module,
    decompose,
    injective_indecomposables,
    is_indecomposable,
    is_injective,
    is_isomorphic,
    is_projective,
    projective_indecomposables,
    quotient_module,
    radical_submodule,
    regular_module,
    simple_modules,
    submodule,
)


class Catalogue:
    """A labelled list of pairwise non-isomorphic indecomposables.

    The constructors in this module guarantee the two catalogue laws
    (members indecomposable, no repeats up to isomorphism).  Catalogues read
    from workspace files should be pushed through validate_catalogue first.
    """

    __slots__ = ("algebra", "members", "labels")

    def __init__(self, algebra, members, labels):
        members = tuple(members)
        labels = tuple(str(l) for l in labels)
        if len(members) != len(labels):
            raise ValueError("need one label per member")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate catalogue labels")
        for m in members:
            if m.algebra is not algebra:
                raise ValueError("members must share the catalogue's algebra object")
        self.algebra = algebra
        self.members = members
        self.labels = labels

    def __len__(self):
        return len(self.members)

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no catalogue member labelled {label!r}") from None

    def member(self, label):
        return self.members[self.index_of(label)]

    def find_isomorphic(self, module):
        """Index of the member isomorphic to the given module, or None."""
        for i, m in enumerate(self.members):
            if m.dim == module.dim and is_isomorphic(m, module):
                return i
        return None

    def __repr__(self):
        return f"Catalogue({len(self.members)} members over dim {self.algebra.dim} algebra)"


def nakayama_catalogue(pres):
    """All indecomposables over a Nakayama quiver algebra.

    Every vertex may carry at most one incoming and one outgoing arrow; the
    indecomposables are then exactly the radical quotients P_v / P_v J^l of
    the projectives, one chain per vertex.  Labels read M[vertex;length].
    """
    indeg = {v: 0 for v in pres.vertices}
    outdeg = {v: 0 for v in pres.vertices}
    for _name, s, t in pres.arrows:
        outdeg[s] += 1
        indeg[t] += 1
    for v in pres.vertices:
        if indeg[v] > 1 or outdeg[v] > 1:
            raise NotNakayama(
                f"vertex {v} has {indeg[v]} arrows in and {outdeg[v]} out")
    A = from_path_algebra(pres)
    reg = regular_module(A)
    members = []
    labels = []
    for v in pres.vertices:
        e = A.basis_element(A.label_index(f"e_{v}"))
        P, _incl = submodule(reg, [A.mul(e, A.basis_element(i))
                                   for i in range(A.dim)])
        # successive radical row spaces of P, expressed in P's coordinates
        layers = []
        cur = P
        emb = Matrix.identity(A.field, P.dim)
        while True:
            rad, incl = radical_submodule(cur)
            if rad.dim == 0:
                break
            emb = incl.matrix * emb
            layers.append([tuple(r) for r in emb.rows])
            cur = rad
        loewy = len(layers) + 1
        for length in range(1, loewy):
            quo, _proj = quotient_module(P, layers[length - 1])
            quo.name = f"M[{v};{length}]"
            members.append(quo)
            labels.append(quo.name)
        P.name = f"M[{v};{loewy}]"
        members.append(P)
        labels.append(P.name)
    return Catalogue(A, members, labels)


def type_a_catalogue(pres):
    """All indecomposables over a path quiver of type A, any orientation.

    The underlying graph must be a simple path and there must be no
    relations.  Members are the interval indicator representations, one per
    pair of positions 1 <= i <= j <= n along the path, labelled M[i..j].
    """
    n = len(pres.vertices)
    if pres.relations:
        raise NotTypeA("relations are not allowed")
    if len(pres.arrows) != n - 1:
        raise NotTypeA(f"a path on {n} vertices needs {n - 1} arrows")
    if pres.nilpotency is not None and pres.nilpotency <= n - 1:
        raise NotTypeA("nilpotency bound would truncate the path algebra")
    adj = {v: [] for v in pres.vertices}
    for _name, s, t in pres.arrows:
        if s == t:
            raise NotTypeA(f"loop at vertex {s}")
        adj[s].append(t)
        adj[t].append(s)
    for v, nb in adj.items():
        if len(nb) > 2 or len(set(nb)) != len(nb):
            raise NotTypeA(f"vertex {v} has underlying degree {len(nb)}")
    if n == 1:
        order = [pres.vertices[0]]
    else:
        ends = [v for v in pres.vertices if len(adj[v]) == 1]
        if len(ends) != 2:
            raise NotTypeA("underlying graph is not a path")
        # walk from the endpoint declared first; stalls mean a disconnected
        # graph (the leftover edges then close a cycle elsewhere)
        order = [ends[0]]
        prev = None
        while len(order) < n:
            steps = [w for w in adj[order[-1]] if w != prev]
            if len(steps) != 1:
                raise NotTypeA("underlying graph is not a single path")
            prev = order[-1]
            order.append(steps[0])
    A = from_path_algebra(pres)
    members = []
    labels = []
    for i in range(n):
        for j in range(i, n):
            m = _interval_module(A, pres, order, i, j)
            m.name = f"M[{i + 1}..{j + 1}]"
            members.append(m)
            labels.append(m.name)
    return Catalogue(A, members, labels)


def _interval_module(A, pres, order, i, j):
    # one dimensional stalk on each position in [i, j], identity along the
    # arrows inside the interval, zero elsewhere
    F = pres.field
    d = j - i + 1
    rho = {}
    for p, v in enumerate(order):
        rows = [[F.zero] * d for _ in range(d)]
        if i <= p <= j:
            rows[p - i][p - i] = F.one
        rho[A.label_index(f"e_{v}")] = Matrix(F, rows, ncols=d)
    positions = {v: p for p, v in enumerate(order)}
    arrow_idx = []
    for name, s, t in pres.arrows:
        rows = [[F.zero] * d for _ in range(d)]
        ps, pt = positions[s], positions[t]
        if i <= ps <= j and i <= pt <= j:
            rows[ps - i][pt - i] = F.one
        idx = A.label_index(name)
        rho[idx] = Matrix(F, rows, ncols=d)
        arrow_idx.append(idx)
    action = _multiplicative_closure(A, rho, arrow_idx)
    return Module(A, action, validate=True)


def _multiplicative_closure(A, rho, arrow_idx):
    """Extend action matrices from path generators to the whole basis.

    Requires every product of two basis paths to be a single basis path or
    zero, which holds exactly when the presentation has no relations.  The
    basis is listed in path length order, so the right factor of any
    composite path is always filled in before the path itself.
    """
    F = A.field
    action = [rho.get(t) for t in range(A.dim)]
    for t in range(A.dim):
        if action[t] is not None:
            continue
        factored = False
        for a in arrow_idx:
            for s in range(t):
                if action[s] is None:
                    continue
                prod = A.mult[a][s]
                hits = [(u, c) for u, c in enumerate(prod) if c != F.zero]
                if len(hits) == 1 and hits[0] == (t, F.one):
                    action[t] = action[a] * action[s]
                    factored = True
                    break
            if factored:
                break
        if not factored:
            raise InvariantViolation(
                f"basis element {A.labels[t]} is not arrow times shorter path")
    return action


def validate_catalogue(c):
    """Check the two catalogue laws and name every offender.

    Returns a dict with keys ok (bool), decomposable (labels of members
    failing indecomposability) and isomorphic_pairs (pairs of labels with
    the earlier member first).
    """
    decomposable = [lab for lab, m in zip(c.labels, c.members)
                    if not is_indecomposable(m)]
    pairs = []
    for i in range(len(c.members)):
        for j in range(i + 1, len(c.members)):
            if is_isomorphic(c.members[i], c.members[j]):
                pairs.append((c.labels[i], c.labels[j]))
    return {"ok": not decomposable and not pairs,
            "decomposable": decomposable,
            "isomorphic_pairs": pairs}


def completeness_check(c):
    """Certify that a valid catalogue is closed under everything downstream.

    Checks, in order: every projective, injective and simple module is
    isomorphic to a member; the translate (resp. inverse translate) of each
    non-projective (resp. non-injective) member lands in the catalogue; so
    does every middle term summand of each almost split sequence.  Missing
    modules are reported together with a witness module so a caller can
    extend the catalogue.  Assumes the catalogue passes validate_catalogue.
    """
    from .ar import almost_split_sequence, tau, tau_inverse

    A = c.algebra
    missing = []

    def record(kind, module, of=None):
        entry = {"kind": kind, "dim": module.dim, "module": module}
        if of is not None:
            entry["of"] = of
        missing.append(entry)

    for kind, mods in (("projective", projective_indecomposables(A)),
                       ("injective", injective_indecomposables(A)),
                       ("simple", simple_modules(A))):
        for m in mods:
            if c.find_isomorphic(m) is None:
                record(kind, m)
    for lab, m in zip(c.labels, c.members):
        if not is_projective(m):
            t = tau(m)
            if c.find_isomorphic(t) is None:
                record("translate", t, of=lab)
        if not is_injective(m):
            t = tau_inverse(m)
            if c.find_isomorphic(t) is None:
                record("inverse translate", t, of=lab)
    for lab, m in zip(c.labels, c.members):
        if is_projective(m):
            continue
        seq = almost_split_sequence(m, c, certify=False)
        for summand, _incl, _proj in decompose(seq.middle):
            if c.find_isomorphic(summand) is None:
                record("middle summand", summand, of=lab)
    return {"complete": not missing, "missing": missing}


def load_catalogue(path):
    """Read a catalogue from a workspace file."""
    from .workspace import parse_workspace

    ws = parse_workspace(path)
    if ws.catalogue is None:
        raise WorkspaceError("file declares no [catalogue] section")
    return ws.catalogue
