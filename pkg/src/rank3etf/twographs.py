"""
Two-graphs, regularity, descendants, and the switching-equivalence decision.

A two-graph is stored as pair masks: masks[i][j] is the bitmask of vertices
z making {i, j, z} a block.  From a graph, a triple is a block iff it spans
an odd number of edges, so masks[i][j] = rows[i] XOR rows[j], complemented
when i ~ j, with bits i and j cleared; from a Gram matrix the sign graph
(edge iff negative inner product) is taken first, which matches the
obtuse-angle reading.  Every constructor output is checked against the
defining axiom (each 4-set of vertices contains an even number of blocks):
exhaustively for n <= 60, on 2000 seeded samples above.

Switching a graph on any vertex subset leaves its two-graph unchanged, and
two graphs are switching equivalent iff their two-graphs are isomorphic.
The decision procedure canonicalizes by vertex isolation: switching G on
the neighbourhood of vertex x isolates x, and deleting x then yields the
descendant at x.  G and H are equivalent iff the descendant of G at 0 is
isomorphic to a descendant of H at some w; the witness (w, bijection) is
returned.  Mismatched block counts or pair-degree multisets decide
NotEquivalent without any search.
"""

import random

from .bounds import effective_bound
from .graphs import Graph, srg_params
from .iso import find_isomorphism

SWITCHING_VERTEX_BOUND = 140
_AXIOM_EXHAUSTIVE_LIMIT = 60
_AXIOM_SAMPLES = 2000
_AXIOM_SEED = 20230423


class NotRegular(ValueError):
    "carries a witness vertex pair"


class TwoGraph:
    "triple system on n vertices; masks[i][j] = bitmask of z with {i,j,z} a block"

    __slots__ = ("n", "masks")

    def __init__(self, n, masks, check=True):
        self.n = n
        self.masks = masks
        if check:
            self._check_consistency()
            self._check_axiom()

    def _check_consistency(self):
        n = self.n
        if n <= _AXIOM_EXHAUSTIVE_LIMIT:
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        else:
            rng = random.Random(_AXIOM_SEED + 1)
            pairs = [tuple(sorted(rng.sample(range(n), 2))) for _ in range(_AXIOM_SAMPLES)]
        for i, j in pairs:
            m = self.masks[i][j]
            assert m == self.masks[j][i]
            assert not (m >> i) & 1 and not (m >> j) & 1, "triple with repeats"
            while m:
                low = m & -m
                z = low.bit_length() - 1
                assert (self.masks[i][z] >> j) & 1, "mask tables disagree"
                m ^= low

    def _quad_even(self, a, b, c, d):
        cnt = (
            ((self.masks[a][b] >> c) & 1)
            + ((self.masks[a][b] >> d) & 1)
            + ((self.masks[a][c] >> d) & 1)
            + ((self.masks[b][c] >> d) & 1)
        )
        return cnt % 2 == 0

    def _check_axiom(self):
        n = self.n
        if n < 4:
            return
        if n <= _AXIOM_EXHAUSTIVE_LIMIT:
            for a in range(n):
                for b in range(a + 1, n):
                    for c in range(b + 1, n):
                        for d in range(c + 1, n):
                            assert self._quad_even(a, b, c, d), "two-graph axiom fails"
        else:
            rng = random.Random(_AXIOM_SEED)
            for _ in range(_AXIOM_SAMPLES):
                a, b, c, d = rng.sample(range(n), 4)
                assert self._quad_even(*sorted((a, b, c, d))), "two-graph axiom fails"

    def contains(self, i, j, k):
        return (self.masks[i][j] >> k) & 1 == 1

    def blocks(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                m = self.masks[i][j] >> (j + 1) << (j + 1)
                while m:
                    low = m & -m
                    yield (i, j, low.bit_length() - 1)
                    m ^= low

    def block_count(self):
        return sum(
            self.masks[i][j].bit_count()
            for i in range(self.n)
            for j in range(i + 1, self.n)
        ) // 3

    def pair_degree(self, i, j):
        return self.masks[i][j].bit_count()

    def pair_degree_multiset(self):
        out = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                d = self.masks[i][j].bit_count()
                out[d] = out.get(d, 0) + 1
        return out

    def descendant_graph(self, x):
        "graph on the other vertices: y ~ z iff {x, y, z} is a block"
        rows = []
        for y in range(self.n):
            if y == x:
                continue
            m = self.masks[x][y]
            low = m & ((1 << x) - 1)
            rows.append(low | ((m >> (x + 1)) << x))
        return Graph.from_rows(rows)

    def __eq__(self, other):
        return (
            isinstance(other, TwoGraph)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __repr__(self):
        return "TwoGraph(n=%d, blocks=%d)" % (self.n, self.block_count())


def two_graph_of(g):
    "blocks are the vertex triples spanning an odd number of edges of g"
    n = g.n
    full = (1 << n) - 1
    masks = [[0] * n for _ in range(n)]
    for i in range(n):
        ri = g.rows[i]
        for j in range(i + 1, n):
            m = ri ^ g.rows[j]
            if (ri >> j) & 1:
                m ^= full
            m &= ~((1 << i) | (1 << j))
            masks[i][j] = masks[j][i] = m
    return TwoGraph(n, masks)


def sign_graph(gm):
    "edge iff the Gram entry is negative (an obtuse angle)"
    m = gm.entries
    n = gm.M
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if m[i, j].sign() < 0
    ]
    return Graph(n, edges, gm.label)


def two_graph_of_gram(gm):
    return two_graph_of(sign_graph(gm))


def is_regular(t):
    "the constant pair degree a; raises NotRegular with a witness pair"
    a = t.pair_degree(0, 1)
    for i in range(t.n):
        for j in range(i + 1, t.n):
            if t.pair_degree(i, j) != a:
                raise NotRegular((i, j))
    return a


def descendant_at(g, x):
    "delete x and switch on its neighbourhood; an SRG (v-1, 2(k-mu), k+lam-2mu, k-mu)"
    from .frames import criteria

    p = srg_params(g)
    assert criteria(p)["equiangular"], "descendant needs an equiangular embedding"
    out = g.switch(list(g.neighbors(x))).delete_vertex(x)
    got = srg_params(out)
    v, k, lam, mu = p.as_tuple()
    want = (v - 1, 2 * (k - mu), k + lam - 2 * mu, k - mu)
    assert got.as_tuple() == want, "descendant parameters %r, expected %r" % (
        got.as_tuple(),
        want,
    )
    return out


def _isolate_and_delete(g, x):
    return g.switch(list(g.neighbors(x))).delete_vertex(x)


def switching_equivalent(g, h, bound=SWITCHING_VERTEX_BOUND):
    """
    A witness (w, perm) mapping the descendant of g at 0 onto the descendant
    of h at w, or None; graphs are equivalent iff their two-graphs are
    isomorphic, and every isomorphism shows up this way.
    """
    if g.n != h.n:
        raise ValueError("vertex counts differ: %d vs %d" % (g.n, h.n))
    cap = effective_bound(bound)
    assert g.n <= cap, "%d vertices exceeds the switching bound %d" % (g.n, cap)
    tg, th = two_graph_of(g), two_graph_of(h)
    if tg.block_count() != th.block_count():
        return None
    if tg.pair_degree_multiset() != th.pair_degree_multiset():
        return None
    g0 = _isolate_and_delete(g, 0)
    for w in range(h.n):
        perm = find_isomorphism(g0, _isolate_and_delete(h, w))
        if perm is not None:
            return (w, perm)
    return None
