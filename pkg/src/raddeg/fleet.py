"""Ready-made representation-finite catalogues.

These are the stock examples exercised throughout the test suite: truncated
polynomial rings, path algebras of linearly ordered quivers in every
orientation, and a five dimensional triangular algebra over GF(2) whose two
vertices carry different residue fields.  Everything here is deterministic;
builders return fresh objects on every call so callers own the caching.
"""

from .fields import GF, QQ
from .algebra import QuiverPresentation, from_structure_constants
from .catalogue import Catalogue, nakayama_catalogue, type_a_catalogue
from .linalg import Matrix
from .modules import Module


def loop_presentation(field, nilpotency):
    """One vertex, one loop, truncated: the quiver form of k[x]/(x^n)."""
    return QuiverPresentation(field, ["v"], [("x", "v", "v")],
                              nilpotency=nilpotency)


def path_presentation(field, n, bits=(1 << 62) - 1):
    """Linearly ordered quiver on n vertices, no relations.

    Bit i of the orientation mask points arrow i forward, from vertex i+1
    toward vertex i+2; a clear bit reverses it.
    """
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(n - 1):
        if (bits >> i) & 1:
            arrows.append((f"a{i}", str(i + 1), str(i + 2)))
        else:
            arrows.append((f"a{i}", str(i + 2), str(i + 1)))
    return QuiverPresentation(field, vertices, arrows)


def truncated_polynomial_catalogue(field, n):
    return nakayama_catalogue(loop_presentation(field, n))


def path_catalogue(field, n, bits=(1 << 62) - 1):
    return type_a_catalogue(path_presentation(field, n, bits))


def species_algebra():
    """Triangular matrix algebra with a GF(4) vertex over a GF(2) base.

    Basis: b0 = unit at the big vertex, b1 = a cube root of unity there,
    b2 = the connecting bimodule generator, b3 = b1*b2, b4 = unit at the
    small vertex.  Dimension 5 over GF(2).
    """
    F = GF(2)
    n = 5
    z = (0,) * n

    def e(*idxs):
        v = [0] * n
        for i in idxs:
            v[i] = 1
        return tuple(v)

    mult = [[z] * n for _ in range(n)]
    for j in (0, 1, 2, 3):
        mult[0][j] = e(j)
    mult[1][0] = e(1)
    mult[1][1] = e(0, 1)
    mult[1][2] = e(3)
    mult[1][3] = e(2, 3)
    mult[2][4] = e(2)
    mult[3][4] = e(3)
    mult[4][4] = e(4)
    return from_structure_constants(F, mult, e(0, 4))


def species_members(A):
    """The four indecomposables of the species algebra, explicit matrices."""
    F = A.field
    ind = lambda *d: Matrix(
        F, [[1 if c == r and d[r] else 0 for c in range(len(d))]
            for r in range(len(d))], ncols=len(d))
    Z1 = Matrix.zero(F, 1, 1)
    S2 = Module(A, [Z1, Z1, Z1, Z1, Matrix(F, [[1]])], name="S2")
    Z2 = Matrix.zero(F, 2, 2)
    S1 = Module(A, [Matrix.identity(F, 2), Matrix(F, [[0, 1], [1, 1]]),
                    Z2, Z2, Z2], name="S1")
    P1 = Module(A, [
        ind(1, 1, 0, 0),
        Matrix(F, [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
        Matrix(F, [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]),
        Matrix(F, [[0, 0, 0, 1], [0, 0, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0]]),
        ind(0, 0, 1, 1)], name="P1")
    Q = Module(A, [
        ind(1, 1, 0),
        Matrix(F, [[0, 1, 0], [1, 1, 0], [0, 0, 0]]),
        Matrix(F, [[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
        Matrix(F, [[0, 0, 1], [0, 0, 1], [0, 0, 0]]),
        ind(0, 0, 1)], name="P1/S2")
    return S2, S1, P1, Q


def species_catalogue():
    A = species_algebra()
    S2, S1, P1, Q = species_members(A)
    return Catalogue(A, [S2, S1, P1, Q], ["S2", "S1", "P1", "P1/S2"])


FIELD_BUILDERS = (("gf2", lambda: GF(2)), ("gf3", lambda: GF(3)),
                  ("qq", lambda: QQ))


def truncated_polynomial_fleet(max_n=6):
    out = []
    for n in range(2, max_n + 1):
        for tag, mk in FIELD_BUILDERS:
            out.append((f"kx{n}/{tag}",
                        truncated_polynomial_catalogue(mk(), n)))
    return out


def path_fleet(max_n=5, field_tag="gf3"):
    mk = dict(FIELD_BUILDERS)[field_tag]
    out = []
    for n in range(2, max_n + 1):
        for bits in range(1 << (n - 1)):
            out.append((f"a{n}/{field_tag}/o{bits}",
                        path_catalogue(mk(), n, bits)))
    return out


def full_fleet():
    """Every fixture family, deterministically ordered and named."""
    out = list(truncated_polynomial_fleet())
    out.extend(path_fleet())
    out.append(("species/gf4-gf2", species_catalogue()))
    return out
