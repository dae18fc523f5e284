"""
Spherical embeddings of strongly regular graphs, ETF certification,
Naimark complements, descendant Gram matrices, and explicit character
vectors for the affine families.

The embedding Gram of a primitive SRG has unit diagonal, s/k on edges and
(-1-s)/(v-k-1) on non-edges; it always satisfies G^2 = (v/g) G. The frame
is a real ETF exactly when the two off-diagonal values have one absolute
value and G^2 = (M/N) G with N = rank G; certification checks both
identities in exact arithmetic and, on success, asserts Welch equality
alpha^2 = (M-N)/(N(M-1)).  Both conditions are decidable from parameters
alone (criteria): equiangularity is s/k = -(-1-s)/(v-k-1), and membership
of the graph in a regular two-graph is v = 2(2k - lambda - mu).

The Naimark complement (M/(M-N)) (I - (N/M) G) swaps N for M - N and is an
involution.  For graphs with k = 2 mu, bordering the switched adjacency
matrix gives the descendant Gram I + (1/(1+2r)) [[0, 1^T], [1, J - I - 2A]]
with (M, N) = (v+1, g+1); the new vertex sits at index 0.  For the affine
families the frame is realized explicitly: column x has entries
(-1)^{B(x,z)} / sqrt(N) over the N nonsingular points z, and its Gram
reproduces the embedding Gram entrywise.
"""

from dataclasses import dataclass
from fractions import Fraction
import json

from .graphs import Graph, spectrum, srg_params
from .matrices import ExactMatrix, mat_mul, mat_rank
from .qext import QuadExt, sqrt_int
from .quadspaces import standard_space


@dataclass(frozen=True)
class GramMatrix:
    entries: ExactMatrix
    label: str = ""

    def __post_init__(self):
        m = self.entries
        assert m.rows == m.cols, "Gram matrix must be square"
        one = QuadExt(1)
        for i in range(m.rows):
            assert m[i, i] == one, "diagonal entry is not 1"
        assert m == m.transpose(), "Gram matrix must be symmetric"

    @property
    def M(self):
        return self.entries.rows

    def __getitem__(self, ij):
        return self.entries[ij]


@dataclass(frozen=True)
class EtfCertificate:
    M: int
    N: int
    alpha_sq: Fraction | None
    tight_const: Fraction
    status: str  # "ETF", "NotEquiangular", "NotTight"
    witness: tuple | None = None

    @property
    def is_etf(self):
        return self.status == "ETF"


def criteria(params):
    "parameter-level tests: equiangular embedding, regular two-graph membership"
    v, k, lam, mu = params.as_tuple()
    sp = spectrum(params)
    rbar = QuadExt(-1) - sp.s
    equiangular = sp.s * (v - k - 1) == -(rbar * k)  # s/k = -rbar/kbar
    two_graph = v == 2 * (2 * k - lam - mu)
    return {"equiangular": equiangular, "two_graph": two_graph}


def embedding_gram(g):
    "unit vectors on the eigenspace of s: 1 diagonal, s/k edges, rbar/kbar non-edges"
    p = srg_params(g)
    sp = spectrum(p)
    k, kbar = p.k, p.v - p.k - 1
    on_edge = sp.s / k
    off_edge = (QuadExt(-1) - sp.s) / kbar
    one = QuadExt(1)
    rows = []
    for i in range(g.n):
        ri = g.rows[i]
        rows.append(
            [one if i == j else (on_edge if (ri >> j) & 1 else off_edge) for j in range(g.n)]
        )
    return GramMatrix(ExactMatrix.from_rows(rows), g.label)


def verify_etf(gm):
    "certify equiangularity and tightness exactly; N is the computed rank"
    m = gm.entries
    M = gm.M
    N = mat_rank(m)
    assert 1 <= N <= M
    c = Fraction(M, N)
    alpha_sq = None
    ref = None
    sq_memo = {}
    for i in range(M):
        for j in range(i + 1, M):
            e = m[i, j]
            s = sq_memo.get(e)
            if s is None:
                s = sq_memo[e] = e.sq()
            if ref is None:
                ref = s
                ref_pos = (i, j)
            elif s != ref:
                return EtfCertificate(M, N, None, c, "NotEquiangular", (ref_pos, (i, j)))
    sq = mat_mul(m, m)
    want = m.scale(c)
    if sq != want:
        pos = next(
            (i, j) for i in range(M) for j in range(M) if sq[i, j] != want[i, j]
        )
        return EtfCertificate(M, N, None, c, "NotTight", pos)
    if M > 1:
        assert ref.is_rational(), "squared inner products must be rational"
        alpha_sq = ref.as_fraction()
        assert alpha_sq == Fraction(M - N, N * (M - 1)), "Welch equality fails"
    else:
        alpha_sq = Fraction(0)
    return EtfCertificate(M, N, alpha_sq, c, "ETF")


def naimark(gm, cert=None):
    "the (M, M-N) complement of an (M, N) ETF; an involution on ETF Grams"
    if cert is None:
        cert = verify_etf(gm)
    assert cert.is_etf, "Naimark complement needs an ETF input"
    M, N = cert.M, cert.N
    assert N < M, "complement needs N < M"
    scaled = gm.entries.scale(Fraction(-N, M - N))
    out = scaled + ExactMatrix.identity(M).scale(Fraction(M, M - N))
    return GramMatrix(out, gm.label)


def descendant_gram(g):
    "border-and-switch Gram for a k = 2 mu graph: ETF with (M, N) = (v+1, g+1)"
    p = srg_params(g)
    assert p.k == 2 * p.mu, "descendant Gram needs k = 2 mu"
    sp = spectrum(p)
    c = (QuadExt(1) + sp.r * 2).inverse()
    neg_c = -c
    one = QuadExt(1)
    v = p.v
    rows = [[one] + [c] * v]
    for i in range(v):
        ri = g.rows[i]
        rows.append(
            [c] + [one if i == j else (neg_c if (ri >> j) & 1 else c) for j in range(v)]
        )
    return GramMatrix(ExactMatrix.from_rows(rows), g.label)


def vo_vectors(n, kind):
    "character columns: entry (z, x) = (-1)^{B(x,z)} / sqrt(N), z nonsingular"
    assert kind in ("plus", "minus_comp")
    sp = standard_space(2, 2 * n, "plus" if kind == "plus" else "minus")
    qt = sp.q_table()
    points = [z for z in range(1, 4**n) if qt[z]]
    N, M = len(points), 4**n
    assert N == 2 ** (n - 1) * (2**n + (-1 if kind == "plus" else 1))
    plus = sqrt_int(N).inverse()
    minus = -plus
    rows = [
        [minus if qt[x ^ z] ^ qt[x] ^ qt[z] else plus for x in range(M)] for z in points
    ]
    return ExactMatrix.from_rows(rows)


def gram_of_columns(mat):
    "Gram matrix of the columns of an explicit frame"
    return GramMatrix(mat_mul(mat.transpose(), mat))


# -- serialization --------------------------------------------------------------


def _frac_str(x):
    return "%d/%d" % (x.numerator, x.denominator)


def gram_to_json(gm, cert=None):
    if cert is None:
        cert = verify_etf(gm)
    m = gm.entries
    entries = [m[i, j].serialize() for i in range(gm.M) for j in range(i, gm.M)]
    return json.dumps(
        {
            "M": gm.M,
            "N": cert.N,
            "D": m.D,
            "entries": entries,
            "certificate": {
                "status": cert.status,
                "M": cert.M,
                "N": cert.N,
                "alpha_sq": None if cert.alpha_sq is None else _frac_str(cert.alpha_sq),
                "tight_const": _frac_str(cert.tight_const),
                "witness": cert.witness,
            },
        },
        separators=(",", ":"),
    )


def gram_from_json(text):
    obj = json.loads(text)
    M = obj["M"]
    vals = [QuadExt.parse(s) for s in obj["entries"]]
    assert len(vals) == M * (M + 1) // 2
    rows = [[None] * M for _ in range(M)]
    it = iter(vals)
    for i in range(M):
        for j in range(i, M):
            rows[i][j] = rows[j][i] = next(it)
    return GramMatrix(ExactMatrix.from_rows(rows))
