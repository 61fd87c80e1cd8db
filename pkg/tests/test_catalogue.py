import pytest

from raddeg.fields import GF, QQ
from raddeg.algebra import QuiverPresentation, from_path_algebra
from raddeg.modules import (
    direct_sum,
    is_isomorphic,
    is_projective,
    projective_indecomposables,
    quotient_module,
    socle,
)
from raddeg.catalogue import (
    Catalogue,
    nakayama_catalogue,
    type_a_catalogue,
    validate_catalogue,
)
from raddeg.errors import NotNakayama, NotTypeA


def loop_pres(F, nilp):
    return QuiverPresentation(F, ["v"], [("x", "v", "v")], nilpotency=nilp)


def a_n_pres(F, n, bits=(1 << 62) - 1):
    # bit i set: arrow i points from vertex i+1 to vertex i+2
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(n - 1):
        if (bits >> i) & 1:
            arrows.append((f"a{i}", str(i + 1), str(i + 2)))
        else:
            arrows.append((f"a{i}", str(i + 2), str(i + 1)))
    return QuiverPresentation(F, vertices, arrows)


def test_nakayama_kx3():
    c = nakayama_catalogue(loop_pres(GF(3), 3))
    assert len(c) == 3
    assert c.labels == ("M[v;1]", "M[v;2]", "M[v;3]")
    assert [m.dim for m in c.members] == [1, 2, 3]
    report = validate_catalogue(c)
    assert report["ok"]
    assert report["decomposable"] == []
    assert report["isomorphic_pairs"] == []


def test_nakayama_kx2():
    c = nakayama_catalogue(loop_pres(GF(2), 2))
    assert len(c) == 2
    assert [m.dim for m in c.members] == [1, 2]


def test_nakayama_linear_a3():
    c = nakayama_catalogue(a_n_pres(GF(3), 3))
    assert len(c) == 6
    assert sorted(m.dim for m in c.members) == [1, 1, 1, 2, 2, 3]
    assert validate_catalogue(c)["ok"]


def test_nakayama_cyclic_two_vertices():
    F = GF(2)
    pres = QuiverPresentation(F, ["1", "2"],
                              [("a", "1", "2"), ("b", "2", "1")],
                              nilpotency=3)
    c = nakayama_catalogue(pres)
    assert len(c) == 6
    assert sorted(m.dim for m in c.members) == [1, 1, 2, 2, 3, 3]
    assert validate_catalogue(c)["ok"]


def test_nakayama_rejects_branching():
    F = GF(3)
    pres = QuiverPresentation(
        F, ["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3")])
    with pytest.raises(NotNakayama):
        nakayama_catalogue(pres)
    pres = QuiverPresentation(
        F, ["1", "2", "3"], [("a", "1", "3"), ("b", "2", "3")])
    with pytest.raises(NotNakayama):
        nakayama_catalogue(pres)


def test_type_a_a2():
    c = type_a_catalogue(a_n_pres(GF(3), 2))
    assert c.labels == ("M[1..1]", "M[1..2]", "M[2..2]")
    assert [m.dim for m in c.members] == [1, 2, 1]
    assert validate_catalogue(c)["ok"]
    for P in projective_indecomposables(c.algebra):
        assert c.find_isomorphic(P) is not None


def test_type_a_a3_both_orientations():
    for bits in (0b11, 0b01):  # linear and middle sink
        c = type_a_catalogue(a_n_pres(GF(3), 3, bits))
        assert len(c) == 6
        assert sorted(m.dim for m in c.members) == [1, 1, 1, 2, 2, 3]
        assert validate_catalogue(c)["ok"]


def test_type_a_matches_nakayama_on_linear_a3():
    ca = type_a_catalogue(a_n_pres(GF(3), 3))
    cb = nakayama_catalogue(a_n_pres(GF(3), 3))
    assert sorted(m.dim for m in ca.members) == sorted(m.dim for m in cb.members)


def test_type_a_rejects_non_paths():
    F = GF(3)
    with pytest.raises(NotTypeA):
        type_a_catalogue(QuiverPresentation(
            F, ["1", "2"], [("a", "1", "2")],
            relations=[[(F.one, ("a",))]]))
    with pytest.raises(NotTypeA):
        type_a_catalogue(loop_pres(F, 3))
    with pytest.raises(NotTypeA):  # 3-cycle, arrow count betrays it
        type_a_catalogue(QuiverPresentation(
            F, ["1", "2", "3"],
            [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]))
    with pytest.raises(NotTypeA):  # star with three branches
        type_a_catalogue(QuiverPresentation(
            F, ["0", "1", "2", "3"],
            [("a", "0", "1"), ("b", "0", "2"), ("c", "0", "3")]))
    with pytest.raises(NotTypeA):  # doubled edge plus an isolated vertex
        type_a_catalogue(QuiverPresentation(
            F, ["1", "2", "3"], [("a", "1", "2"), ("b", "2", "1")]))
    with pytest.raises(NotTypeA):  # truncation would cut the length two path
        type_a_catalogue(QuiverPresentation(
            F, ["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")],
            nilpotency=2))
    # a vacuous bound is fine: A_2 has no length two paths to cut
    assert len(type_a_catalogue(QuiverPresentation(
        F, ["1", "2"], [("a", "1", "2")], nilpotency=2))) == 3


def test_type_a_single_vertex():
    c = type_a_catalogue(QuiverPresentation(QQ, ["1"], []))
    assert len(c) == 1
    assert c.members[0].dim == 1


@pytest.mark.parametrize("bits", range(8))
def test_type_a_a4_all_orientations(bits):
    c = type_a_catalogue(a_n_pres(GF(3), 4, bits))
    assert len(c) == 10
    assert sum(m.dim for m in c.members) == 20
    assert validate_catalogue(c)["ok"]
    projs = [m for m in c.members if is_projective(m)]
    assert len(projs) == 4


def test_validate_names_offenders():
    c = nakayama_catalogue(loop_pres(GF(3), 3))
    m1, m2 = c.member("M[v;1]"), c.member("M[v;2]")
    twice = Catalogue(c.algebra, [m1, m2, m2], ["a", "b", "c"])
    report = validate_catalogue(twice)
    assert not report["ok"]
    assert report["isomorphic_pairs"] == [("b", "c")]
    assert report["decomposable"] == []

    double, _incl, _proj = direct_sum([m1, m1])
    mixed = Catalogue(c.algebra, [m1, double], ["a", "b"])
    report = validate_catalogue(mixed)
    assert not report["ok"]
    assert report["decomposable"] == ["b"]
    assert report["isomorphic_pairs"] == []


def test_find_isomorphic():
    c = nakayama_catalogue(loop_pres(GF(3), 3))
    P = c.member("M[v;3]")
    soc, incl = socle(P)
    quo, _proj = quotient_module(P, [tuple(r) for r in incl.matrix.rows])
    assert c.find_isomorphic(quo) == c.index_of("M[v;2]")
    assert is_isomorphic(quo, c.member("M[v;2]"))


def test_catalogue_construction_errors():
    c = nakayama_catalogue(loop_pres(GF(2), 2))
    with pytest.raises(ValueError):
        Catalogue(c.algebra, c.members, ["only one label"])
    with pytest.raises(ValueError):
        Catalogue(c.algebra, c.members, ["same", "same"])
    other = from_path_algebra(loop_pres(GF(2), 2))
    with pytest.raises(ValueError):
        Catalogue(other, c.members, list(c.labels))
    with pytest.raises(KeyError):
        c.index_of("M[v;9]")
