"""
Simple graphs as packed adjacency bitmasks, with exact strongly-regular
certification.

A graph on v vertices stores one integer per vertex whose bit j is the
adjacency to vertex j, so common-neighbour counts are popcounts of ANDed
rows and Seidel switching is an XOR.  srg_params certifies the defining
identity A^2 = kI + lambda A + mu (J - I - A) pairwise and raises
NotStronglyRegular with a witness on failure.

From (v, k, lambda, mu) the non-principal eigenvalues are the roots
r > s of xi^2 + (mu - lambda) xi + (mu - k) = 0, exact in Q(sqrt(disc))
with disc = (lambda - mu)^2 + 4(k - mu); multiplicities f, g follow from
trace(A) = 0 and must be positive integers (the half-case with irrational
r forces f = g = (v-1)/2).  eigenmatrices builds the 3x3 first and second
eigenmatrices P and Q and verifies P Q = v I exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
import json

from .matrices import ExactMatrix, mat_mul
from .qext import QuadExt, sqrt_int


class NotStronglyRegular(ValueError):
    "raised with a human-readable reason and an offending vertex pair if any"


class Graph:
    "simple undirected graph; rows[i] bit j set iff i ~ j"

    __slots__ = ("n", "rows", "label")

    def __init__(self, n, edges, label=""):
        rows = [0] * n
        for i, j in edges:
            assert 0 <= i < n and 0 <= j < n and i != j, "bad edge (%r, %r)" % (i, j)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self.n = n
        self.rows = tuple(rows)
        self.label = label

    @staticmethod
    def from_rows(rows, label=""):
        g = Graph.__new__(Graph)
        g.n = len(rows)
        g.rows = tuple(rows)
        g.label = label
        mask = (1 << g.n) - 1
        for i, r in enumerate(g.rows):
            assert 0 <= r <= mask and not (r >> i) & 1, "loop or stray bit at %d" % i
        for i in range(g.n):
            for j in range(i + 1, g.n):
                assert (g.rows[i] >> j) & 1 == (g.rows[j] >> i) & 1, "asymmetric pair"
        return g

    def adj(self, i, j):
        return (self.rows[i] >> j) & 1 == 1

    def degree(self, i):
        return self.rows[i].bit_count()

    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        for i in range(self.n):
            r = self.rows[i] >> (i + 1) << (i + 1)
            while r:
                low = r & -r
                yield (i, low.bit_length() - 1)
                r ^= low

    def neighbors(self, i):
        r = self.rows[i]
        while r:
            low = r & -r
            yield low.bit_length() - 1
            r ^= low

    def complement(self):
        mask = (1 << self.n) - 1
        rows = [mask ^ r ^ (1 << i) for i, r in enumerate(self.rows)]
        lab = self.label
        lab = lab[:-5] if lab.endswith("_comp") else (lab + "_comp" if lab else "")
        return Graph.from_rows(rows, lab)

    def switch(self, subset):
        "Seidel switching: flip all edges between subset and its complement"
        smask = 0
        for i in subset:
            assert 0 <= i < self.n
            smask |= 1 << i
        cmask = ((1 << self.n) - 1) ^ smask
        rows = [
            r ^ (cmask if (smask >> i) & 1 else smask) for i, r in enumerate(self.rows)
        ]
        return Graph.from_rows(rows, self.label)

    def delete_vertex(self, x):
        assert 0 <= x < self.n
        low = (1 << x) - 1
        rows = []
        for i, r in enumerate(self.rows):
            if i == x:
                continue
            rows.append((r & low) | ((r >> (x + 1)) << x))
        return Graph.from_rows(rows, self.label)

    def relabel(self, perm):
        "perm[i] is the new name of old vertex i"
        assert sorted(perm) == list(range(self.n))
        rows = [0] * self.n
        for i, r in enumerate(self.rows):
            nr = 0
            while r:
                low = r & -r
                nr |= 1 << perm[low.bit_length() - 1]
                r ^= low
            rows[perm[i]] = nr
        return Graph.from_rows(rows, self.label)

    def adjacency_matrix(self):
        return ExactMatrix.from_rows(
            [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]
        )

    def to_json(self):
        return json.dumps(
            {"v": self.n, "edges": sorted([i, j] for i, j in self.edges()), "label": self.label},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text):
        obj = json.loads(text)
        return Graph(obj["v"], [tuple(e) for e in obj["edges"]], obj.get("label", ""))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return "Graph(n=%d, edges=%d%s)" % (
            self.n,
            self.edge_count(),
            ", label=%r" % self.label if self.label else "",
        )


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        # 0 < mu keeps the graph connected, mu < k its complement
        assert 0 < k < v - 1 and 0 < mu < k, "parameters are not primitive"
        assert k * (k - lam - 1) == (v - k - 1) * mu, "parameter identity fails"

    def complement(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        return SrgParams(v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)

    def as_tuple(self):
        return (self.v, self.k, self.lam, self.mu)


def srg_params(g):
    "certify strong regularity pairwise; primitive SrgParams or NotStronglyRegular"
    n = g.n
    if n < 4:
        raise NotStronglyRegular("too few vertices: %d" % n)
    rows = g.rows
    k = rows[0].bit_count()
    for i in range(1, n):
        if rows[i].bit_count() != k:
            raise NotStronglyRegular("degree differs at vertex %d" % i)
    lam = mu = None
    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            c = (ri & rows[j]).bit_count()
            if (ri >> j) & 1:
                if lam is None:
                    lam = c
                elif lam != c:
                    raise NotStronglyRegular(
                        "common-neighbour count varies on edges: pair (%d, %d)" % (i, j)
                    )
            else:
                if mu is None:
                    mu = c
                elif mu != c:
                    raise NotStronglyRegular(
                        "common-neighbour count varies on non-edges: pair (%d, %d)"
                        % (i, j)
                    )
    if k == 0 or k == n - 1:
        raise NotStronglyRegular("complete or edgeless graph")
    if mu is None or mu == 0:
        raise NotStronglyRegular("disconnected graph")
    if mu == k:
        raise NotStronglyRegular("disconnected complement (complete multipartite)")
    return SrgParams(n, k, lam, mu)


@dataclass(frozen=True)
class Spectrum:
    "eigenvalues k > r > s with multiplicities 1, f, g"
    k: int
    r: QuadExt
    s: QuadExt
    f: int
    g: int

    @property
    def conference(self):
        return self.r.D != 0


def spectrum(params):
    v, k, lam, mu = params.as_tuple()
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    assert disc > 0
    root = sqrt_int(disc)
    r = (QuadExt(lam - mu) + root) / 2
    s = (QuadExt(lam - mu) - root) / 2
    assert r.sign() > 0 and s.sign() < 0, "primitive spectrum must straddle zero"
    if root.is_rational():
        fq = (QuadExt(-k) - s * (v - 1)) / (r - s)
        f = fq.as_fraction()
        assert f.denominator == 1 and 0 < f < v, "multiplicity is not integral"
        f = int(f)
        g = v - 1 - f
    else:
        # irrational eigenvalues force equal multiplicities: the half case
        assert 2 * k + (v - 1) * (lam - mu) == 0, "irrational case needs trace zero"
        assert (v - 1) % 2 == 0
        f = g = (v - 1) // 2
    assert QuadExt(k) + r * f + s * g == 0  # trace of A
    assert QuadExt(k * k) + r.sq() * f + s.sq() * g == QuadExt(v * k)  # trace of A^2
    return Spectrum(k, r, s, f, g)


@dataclass(frozen=True)
class Eigenmatrices:
    P: ExactMatrix
    Q: ExactMatrix


def eigenmatrices(params):
    "first and second eigenmatrices, verified to satisfy P Q = v I"
    v, k = params.v, params.k
    sp = spectrum(params)
    r, s, f, g = sp.r, sp.s, sp.f, sp.g
    kbar = v - k - 1
    rbar = QuadExt(-1) - s
    sbar = QuadExt(-1) - r
    P = ExactMatrix.from_rows(
        [[1, QuadExt(k), QuadExt(kbar)], [1, r, sbar], [1, s, rbar]]
    )
    ik, ikbar = Fraction(1, k), Fraction(1, kbar)
    Q = ExactMatrix.from_rows(
        [
            [1, f, g],
            [1, r * (f * ik), s * (g * ik)],
            [1, sbar * (f * ikbar), rbar * (g * ikbar)],
        ]
    )
    prod = mat_mul(P, Q)
    assert prod == ExactMatrix.identity(3).scale(v), "P Q != v I"
    return Eigenmatrices(P, Q)
