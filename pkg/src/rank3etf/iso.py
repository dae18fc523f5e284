"""
Graph isomorphism by joint colour refinement with individualization.

Both graphs are refined together so colour ids stay comparable: a vertex
signature is its current colour plus its neighbour count into every colour
class (a popcount against the class bitmask), and new ids are handed out
by sorted signature, so mismatched histograms abort a branch immediately.
Strongly regular graphs are regular in every 1-dimensional sense, so
refinement alone never splits them; the search individualizes a vertex of
the smallest non-singleton class, pairs it against each same-coloured
target, and recurses.  A discrete colouring proposes a bijection that is
then checked edge-by-edge before being returned.

Cheap invariants run first: order, degree multiset, and the multiset of
common-neighbour counts over all vertex pairs, which separates strongly
regular graphs with different (lambda, mu) without any search.
"""

from .bounds import effective_bound

ISO_VERTEX_BOUND = 300


def _pair_count_multiset(g):
    counts = {}
    rows = g.rows
    for i in range(g.n):
        ri = rows[i]
        for j in range(i + 1, g.n):
            key = ((ri >> j) & 1, (ri & rows[j]).bit_count())
            counts[key] = counts.get(key, 0) + 1
    return counts


def _refine(rows_g, rows_h, col_g, col_h):
    "shared-id colour refinement; None on histogram mismatch"
    n = len(col_g)
    while True:
        colors = sorted(set(col_g))
        if sorted(set(col_h)) != colors:
            return None
        mask_g = {c: 0 for c in colors}
        mask_h = {c: 0 for c in colors}
        for v in range(n):
            mask_g[col_g[v]] |= 1 << v
            mask_h[col_h[v]] |= 1 << v
        for c in colors:
            if mask_g[c].bit_count() != mask_h[c].bit_count():
                return None
        sig_g = [
            (col_g[v], tuple((rows_g[v] & mask_g[c]).bit_count() for c in colors))
            for v in range(n)
        ]
        sig_h = [
            (col_h[v], tuple((rows_h[v] & mask_h[c]).bit_count() for c in colors))
            for v in range(n)
        ]
        if sorted(sig_g) != sorted(sig_h):
            return None
        ids = {s: i for i, s in enumerate(sorted(set(sig_g)))}
        new_g = [ids[s] for s in sig_g]
        new_h = [ids[s] for s in sig_h]
        if len(ids) == len(colors):
            return new_g, new_h
        col_g, col_h = new_g, new_h


def _verify(rows_g, rows_h, perm):
    n = len(perm)
    for i in range(n):
        pi = perm[i]
        for j in range(i + 1, n):
            if (rows_g[i] >> j) & 1 != (rows_h[pi] >> perm[j]) & 1:
                return False
    return True


def _search(rows_g, rows_h, col_g, col_h):
    refined = _refine(rows_g, rows_h, col_g, col_h)
    if refined is None:
        return None
    col_g, col_h = refined
    n = len(col_g)
    class_size = {}
    for c in col_g:
        class_size[c] = class_size.get(c, 0) + 1
    split = [(sz, c) for c, sz in class_size.items() if sz > 1]
    if not split:
        where = {c: v for v, c in enumerate(col_h)}
        perm = [where[c] for c in col_g]
        return perm if _verify(rows_g, rows_h, perm) else None
    _, c = min(split)
    u = col_g.index(c)
    fresh = n  # colour ids are < n after refinement
    for w in range(n):
        if col_h[w] != c:
            continue
        cg = list(col_g)
        ch = list(col_h)
        cg[u] = fresh
        ch[w] = fresh
        perm = _search(rows_g, rows_h, cg, ch)
        if perm is not None:
            return perm
    return None


def find_isomorphism(g, h, bound=ISO_VERTEX_BOUND):
    "a vertex bijection perm with i ~ j iff perm[i] ~ perm[j], or None"
    if g.n != h.n:
        return None
    assert g.n <= effective_bound(bound), "graph too large for isomorphism search"
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return None
    if _pair_count_multiset(g) != _pair_count_multiset(h):
        return None
    perm = _search(g.rows, h.rows, [0] * g.n, [0] * h.n)
    if perm is not None:
        assert _verify(g.rows, h.rows, perm)
    return perm


def isomorphic(g, h, bound=ISO_VERTEX_BOUND):
    return find_isomorphism(g, h, bound) is not None
