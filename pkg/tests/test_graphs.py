"""
Graphs as bitmask rows, SRG certification with rejection witnesses, spectra
and eigenmatrices.  Oracles: the pentagon (5,2,0,1), the Petersen graph
(10,3,0,1) with spectrum 3, 1^5, (-2)^4, a conference spectrum with equal
multiplicities, and a rank 3 eigenmatrix pair with denominator-5 entries.
"""

import json
import random
from fractions import Fraction

import pytest

from rank3etf.families import build
from rank3etf.graphs import (
    Graph,
    NotStronglyRegular,
    SrgParams,
    eigenmatrices,
    spectrum,
    srg_params,
)
from rank3etf.matrices import ExactMatrix, mat_mul
from rank3etf.qext import QuadExt


def _cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], "C%d" % n)


def _petersen():
    return build("Triangular", 5).complement()


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], "P4")
    assert g.degree(1) == 2 and g.degree(0) == 1
    assert g.edge_count() == 3
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == [0, 2] or list(g.neighbors(1)) == [0, 2]
    assert g.adj(0, 1) and not g.adj(0, 2)
    with pytest.raises(AssertionError):
        Graph(3, [(0, 0)])  # loop
    with pytest.raises(AssertionError):
        Graph.from_rows([0b010, 0b000, 0b000])  # asymmetric


def test_complement_switch_delete_relabel():
    g = _cycle(5)
    assert g.complement().complement() == g
    assert g.complement().edge_count() == 5 * 4 // 2 - 5
    assert g.switch([0, 2]).switch([0, 2]) == g
    assert g.switch([]) == g and g.switch(range(5)) == g
    d = g.delete_vertex(0)
    assert d.n == 4 and d.edge_count() == 3  # path 1-2-3-4
    rng = random.Random(99)
    perm = list(range(5))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert h.edge_count() == g.edge_count()
    for i, j in g.edges():
        assert h.adj(perm[i], perm[j])


def test_json_round_trip():
    g = _petersen()
    h = Graph.from_json(g.to_json())
    assert h == g and h.label == g.label
    assert json.loads(g.to_json())["v"] == 10


def test_srg_params_oracles():
    assert srg_params(_cycle(5)).as_tuple() == (5, 2, 0, 1)
    assert srg_params(_petersen()).as_tuple() == (10, 3, 0, 1)
    assert srg_params(build("Lattice", 3)).as_tuple() == (9, 4, 1, 2)


def test_srg_rejections():
    with pytest.raises(NotStronglyRegular, match="degree"):
        srg_params(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(NotStronglyRegular, match="disconnected graph"):
        srg_params(Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    with pytest.raises(NotStronglyRegular, match="complete"):
        srg_params(Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]))
    # complete multipartite K_{2,2,2}: strongly regular but mu = k, imprimitive
    k222 = Graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if i % 3 != j % 3])
    with pytest.raises(NotStronglyRegular, match="complement"):
        srg_params(k222)
    with pytest.raises(NotStronglyRegular, match="varies"):
        srg_params(_cycle(6))
    with pytest.raises(NotStronglyRegular):
        srg_params(Graph(3, [(0, 1)]))


def test_srg_params_primitivity_guard():
    with pytest.raises(AssertionError):
        SrgParams(6, 4, 2, 4)  # mu = k
    with pytest.raises(AssertionError):
        SrgParams(10, 3, 0, 2)  # identity fails


def test_complement_params():
    p = srg_params(_petersen())
    q = p.complement()
    assert q.as_tuple() == (10, 6, 3, 4)
    assert srg_params(_petersen().complement()).as_tuple() == q.as_tuple()
    assert q.complement() == p


def test_spectrum_petersen():
    sp = spectrum(srg_params(_petersen()))
    assert (sp.k, sp.f, sp.g) == (3, 5, 4)
    assert sp.r == QuadExt(1) and sp.s == QuadExt(-2)
    assert not sp.conference


def test_spectrum_conference():
    sp = spectrum(srg_params(build("Paley", 13)))
    assert sp.conference
    assert sp.f == sp.g == 6
    assert sp.r == QuadExt(Fraction(-1, 2), Fraction(1, 2), 13)
    assert sp.s == QuadExt(Fraction(-1, 2), Fraction(-1, 2), 13)


def test_spectrum_trace_identities_random_corpus():
    for fam, size in (("Paley", 9), ("Triangular", 6), ("Lattice", 4), ("Paley", 17)):
        p = srg_params(build(fam, size))
        sp = spectrum(p)
        assert QuadExt(p.k) + sp.r * sp.f + sp.s * sp.g == 0
        assert sp.f + sp.g + 1 == p.v


def test_eigenmatrices_pq_identity():
    for fam, size in (("Paley", 9), ("Paley", 13), ("Triangular", 7), ("Lattice", 4)):
        p = srg_params(build(fam, size))
        em = eigenmatrices(p)
        assert mat_mul(em.P, em.Q) == ExactMatrix.identity(3).scale(p.v)
        assert em.P[0, 1] == QuadExt(p.k)
        assert em.Q[0, 1] == QuadExt(spectrum(p).f)


def test_eigenmatrices_fractional_oracle():
    # (176, 105, 68, 54): eigenvalues 17 and -3, multiplicities 21 and 154;
    # second eigenmatrix rows (1, 17/5, -22/5) and (1, -27/5, 22/5)
    em = eigenmatrices(SrgParams(176, 105, 68, 54))
    want_q = ExactMatrix.from_rows(
        [
            [1, 21, 154],
            [1, Fraction(17, 5), Fraction(-22, 5)],
            [1, Fraction(-27, 5), Fraction(22, 5)],
        ]
    )
    assert em.Q == want_q
    want_p = ExactMatrix.from_rows([[1, 105, 70], [1, 17, -18], [1, -3, 2]])
    assert em.P == want_p


def test_adjacency_matrix_squares():
    # A^2 = k I + lam A + mu (J - I - A) checked matricially on the pentagon
    g = _cycle(5)
    a = g.adjacency_matrix()
    p = srg_params(g)
    j = ExactMatrix.from_rows([[1] * 5 for _ in range(5)])
    i = ExactMatrix.identity(5)
    lhs = mat_mul(a, a)
    rhs = i.scale(p.k) + a.scale(p.lam) + (j - i - a).scale(p.mu)
    assert lhs == rhs
