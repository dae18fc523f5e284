"""
Dense exact matrices over Q(sqrt(D)).

Entries are QuadExt scalars sharing one radical D per matrix (rational
entries, D = 0, mix freely).  Multiplication clears denominators and runs on
integer matrices: a numpy int64 product is used whenever the a-priori bound
inner_dim * max|A| * max|B| < 2^62 proves it exact, otherwise plain bigint
loops take over.  A matrix with irrational entries splits as A + B*sqrt(D)
and costs four integer products.

Rank is computed by fraction-free (Bareiss) elimination after clearing
denominators; the intermediate entries are minors of the integer matrix, so
every division is exact, over Z as well as over Z[sqrt(D)].  Pivoting is
deterministic: first nonzero entry, lowest row index.
"""

from fractions import Fraction
from math import lcm

import numpy as np

from .qext import QuadExt

_NP_BOUND = 2**62


class ExactMatrix:
    "immutable dense matrix of QuadExt entries sharing one radical"

    __slots__ = ("rows", "cols", "entries", "D")

    def __init__(self, rows, cols, entries):
        assert rows >= 0 and cols >= 0 and len(entries) == rows * cols
        D = 0
        for e in entries:
            assert isinstance(e, QuadExt)
            if e.D:
                assert D in (0, e.D), "mixed radicals %d vs %d" % (D, e.D)
                D = e.D
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "D", D)

    def __setattr__(self, *_):
        raise AttributeError("ExactMatrix is immutable")

    @staticmethod
    def from_rows(rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            assert len(row) == c
            flat.extend(QuadExt.coerce(x) for x in row)
        return ExactMatrix(r, c, flat)

    @staticmethod
    def identity(n):
        one, zero = QuadExt(1), QuadExt(0)
        return ExactMatrix(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @staticmethod
    def zero(r, c):
        z = QuadExt(0)
        return ExactMatrix(r, c, [z] * (r * c))

    def __getitem__(self, ij):
        i, j = ij
        assert 0 <= i < self.rows and 0 <= j < self.cols
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self):
        return ExactMatrix(
            self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        for x, y in zip(self.entries, other.entries):
            if x is not y and x != y:
                return False
        return True

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(
            self.rows, self.cols, [x + y for x, y in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(
            self.rows, self.cols, [x - y for x, y in zip(self.entries, other.entries)]
        )

    def scale(self, c):
        c = QuadExt.coerce(c)
        memo = {}
        out = []
        for e in self.entries:
            v = memo.get(e)
            if v is None:
                v = memo[e] = e * c
            out.append(v)
        return ExactMatrix(self.rows, self.cols, out)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return mat_mul(self, other)
        return self.scale(other)

    def __repr__(self):
        return "ExactMatrix(%dx%d, D=%d)" % (self.rows, self.cols, self.D)


def _int_split(m):
    """(A, B, den) with entry = (A[i] + B[i]*sqrt(D)) / den, all integers.

    A and B are flat lists; den is the lcm of all entry denominators.
    """
    memo = {}
    den = 1
    for e in m.entries:
        if e not in memo:
            memo[e] = None
            den = lcm(den, e.a.denominator, e.b.denominator)
    for e in memo:
        memo[e] = (int(e.a * den), int(e.b * den))
    pairs = [memo[e] for e in m.entries]
    return [p[0] for p in pairs], [p[1] for p in pairs], den


def _imatmul(A, B, m, k, n):
    "exact product of integer matrices given as flat lists; returns flat list"
    if m == 0 or n == 0 or k == 0:
        return [0] * (m * n)
    amax = max(map(abs, A), default=0)
    bmax = max(map(abs, B), default=0)
    if amax and bmax and k * amax * bmax < _NP_BOUND:
        a = np.array(A, dtype=np.int64).reshape(m, k)
        b = np.array(B, dtype=np.int64).reshape(k, n)
        return [int(x) for x in (a @ b).ravel()]
    if amax == 0 or bmax == 0:
        return [0] * (m * n)
    # bigint fallback
    bcols = [[B[r * n + c] for r in range(k)] for c in range(n)]
    out = [0] * (m * n)
    for i in range(m):
        arow = A[i * k : (i + 1) * k]
        base = i * n
        for j in range(n):
            out[base + j] = sum(x * y for x, y in zip(arow, bcols[j]))
    return out


def mat_mul(x, y):
    "exact matrix product"
    assert x.cols == y.rows, "dimension mismatch %dx%d * %dx%d" % (
        x.rows, x.cols, y.rows, y.cols)
    if x.D and y.D and x.D != y.D:
        raise ValueError("incompatible radicals sqrt(%d) vs sqrt(%d)" % (x.D, y.D))
    D = x.D or y.D
    m, k, n = x.rows, x.cols, y.cols
    XA, XB, xd = _int_split(x)
    YA, YB, yd = _int_split(y)
    den = xd * yd
    PA = _imatmul(XA, YA, m, k, n)
    if any(XB) or any(YB):
        PBB = _imatmul(XB, YB, m, k, n)
        PAB = _imatmul(XA, YB, m, k, n)
        PBA = _imatmul(XB, YA, m, k, n)
        ents = [
            QuadExt(Fraction(pa + D * pbb, den), Fraction(pab + pba, den), D)
            for pa, pbb, pab, pba in zip(PA, PBB, PAB, PBA)
        ]
    else:
        memo = {}
        ents = []
        for pa in PA:
            v = memo.get(pa)
            if v is None:
                v = memo[pa] = QuadExt(Fraction(pa, den))
            ents.append(v)
    return ExactMatrix(m, n, ents)


def _int_rank(rows, ncols):
    "Bareiss elimination over Z; rows is a list of mutable int lists (consumed)"
    m = len(rows)
    rank, prev, col = 0, 1, 0
    while rank < m and col < ncols:
        piv = None
        for i in range(rank, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, m):
            ri = rows[i]
            ric = ri[col]
            if ric:
                for j in range(col + 1, ncols):
                    ri[j] = (p * ri[j] - ric * prow[j]) // prev
                ri[col] = 0
            elif prev != p:
                for j in range(col + 1, ncols):
                    ri[j] = (p * ri[j]) // prev
        prev = p
        rank += 1
        col += 1
    return rank


def _quad_rank(rows, ncols, D):
    "Bareiss elimination over Z[sqrt(D)]; entries are (a, b) integer pairs"

    def qmul(x, y):
        return (x[0] * y[0] + x[1] * y[1] * D, x[0] * y[1] + x[1] * y[0])

    def qdiv(x, y):
        nrm = y[0] * y[0] - y[1] * y[1] * D
        na = x[0] * y[0] - x[1] * y[1] * D
        nb = x[1] * y[0] - x[0] * y[1]
        qa, ra = divmod(na, nrm)
        qb, rb = divmod(nb, nrm)
        assert ra == 0 and rb == 0, "inexact division in Bareiss step"
        return (qa, qb)

    m = len(rows)
    rank, prev, col = 0, (1, 0), 0
    while rank < m and col < ncols:
        piv = None
        for i in range(rank, m):
            if rows[i][col] != (0, 0):
                piv = i
                break
        if piv is None:
            col += 1
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, m):
            ri = rows[i]
            ric = ri[col]
            for j in range(col + 1, ncols):
                num = qmul(p, ri[j])
                sub = qmul(ric, prow[j])
                ri[j] = qdiv((num[0] - sub[0], num[1] - sub[1]), prev)
            ri[col] = (0, 0)
        prev = p
        rank += 1
        col += 1
    return rank


def mat_rank(m):
    "rank over Q(sqrt(D)), by fraction-free elimination; exact"
    A, B, _ = _int_split(m)  # denominator does not affect rank
    nc = m.cols
    if not any(B):
        rows = [A[i * nc : (i + 1) * nc] for i in range(m.rows)]
        return _int_rank(rows, nc)
    rows = [
        [(A[i * nc + j], B[i * nc + j]) for j in range(nc)]
        for i in range(m.rows)
    ]
    return _quad_rank(rows, nc, m.D)
