"""Pure numpy/Python kernels. Reference path and fallback when numba is off."""
import numpy as np

NAME = "python"


def minimal_mask(rows):
    """Keep-mask for the divisibility-minimal rows.

    ``rows`` must be duplicate free and sorted by total degree, so a divisor
    always precedes its multiples.
    """
    rows = np.asarray(rows, dtype=np.int64)
    keep = np.zeros(len(rows), dtype=np.bool_)
    kept = np.empty((0, rows.shape[1]), dtype=np.int64)
    for r, row in enumerate(rows):
        if len(kept) and np.all(kept <= row, axis=1).any():
            continue
        keep[r] = True
        kept = np.vstack([kept, row])
    return keep


def lcm_closure(gens, cap):
    """All lcms of nonempty generator subsets. Returns (rows, ok)."""
    gens = np.asarray(gens, dtype=np.int64)
    n = gens.shape[1]
    seen = set()
    order = []
    for g in gens:
        t = tuple(int(x) for x in g)
        if t not in seen:
            seen.add(t)
            order.append(t)
    if len(order) > cap:
        return np.empty((0, n), dtype=np.int64), False
    head = 0
    while head < len(order):
        x = np.array(order[head], dtype=np.int64)
        head += 1
        for y in np.maximum(gens, x):
            t = tuple(int(v) for v in y)
            if t not in seen:
                seen.add(t)
                order.append(t)
                if len(order) > cap:
                    return np.empty((0, n), dtype=np.int64), False
    return np.array(order, dtype=np.int64).reshape(-1, n), True


def basic_covers(inc, k, cap):
    """Depth-first search for basic k-covers over the facet incidence ``inc``.

    Vertices are assigned in index order. A vertex whose facets all close at
    it has a forced value; every vertex is checked for a tight facet as soon
    as all of its facets are fully assigned.
    """
    inc = np.asarray(inc, dtype=np.bool_)
    nf, n = inc.shape
    facets = [np.flatnonzero(inc[f]).tolist() for f in range(nf)]
    of_vertex = [[f for f in range(nf) if inc[f, v]] for v in range(n)]
    last = [F[-1] for F in facets]
    done_at = [max((last[f] for f in of_vertex[v]), default=-1) for v in range(n)]
    settle = [[u for u in range(n) if done_at[u] == v] for v in range(n)]
    closing = [[f for f in of_vertex[v] if last[f] == v] for v in range(n)]
    fsum = [0] * nf
    alpha = [0] * n
    out = []

    def tight(u):
        return alpha[u] == 0 or any(fsum[f] == k for f in of_vertex[u])

    def rec(v):
        if v == n:
            out.append(list(alpha))
            return len(out) <= cap
        if not of_vertex[v]:
            lo = hi = 0
        else:
            lo = max([k - fsum[f] for f in closing[v]] + [0])
            hi = lo if len(closing[v]) == len(of_vertex[v]) else k
        for val in range(lo, hi + 1):
            alpha[v] = val
            for f in of_vertex[v]:
                fsum[f] += val
            ok = all(tight(u) for u in settle[v])
            if ok and not rec(v + 1):
                return False
            for f in of_vertex[v]:
                fsum[f] -= val
        alpha[v] = 0
        return True

    finished = rec(0)
    if not finished:
        return np.empty((0, n), dtype=np.int64), False
    return np.array(out, dtype=np.int64).reshape(-1, n), True


def rank_mod_p(M, p):
    """Rank over GF(p) by row reduction."""
    A = np.asarray(M, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = np.flatnonzero(A[r:, c])
        if len(piv) == 0:
            continue
        q = r + piv[0]
        if q != r:
            A[[r, q]] = A[[q, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        below = np.flatnonzero(A[r + 1:, c]) + r + 1
        if len(below):
            A[below] = (A[below] - np.outer(A[below, c], A[r])) % p
        r += 1
    return r


def rank_bareiss(M):
    """Exact rank over the rationals by fraction-free elimination."""
    A = [[int(x) for x in row] for row in np.asarray(M)]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        q = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if q is None:
            continue
        A[r], A[q] = A[q], A[r]
        piv = A[r][c]
        for i in range(r + 1, rows):
            a_ic = A[i][c]
            row_i = A[i]
            row_r = A[r]
            for j in range(c + 1, cols):
                row_i[j] = (row_i[j] * piv - a_ic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def _faces_by_size(face, s):
    by_size = [[] for _ in range(s + 1)]
    for mask in range(1 << s):
        if face[mask]:
            by_size[bin(mask).count("1")].append(mask)
    return by_size


def _boundary(upper, lower, s):
    index = {m: t for t, m in enumerate(lower)}
    B = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for col, mask in enumerate(upper):
        pos = 0
        for t in range(s):
            if mask >> t & 1:
                B[index[mask ^ (1 << t)], col] = -1 if pos & 1 else 1
                pos += 1
    return B


def betti_at(gens, degrees, p):
    """Betti numbers beta_{i,a} for i = 0..n at each multidegree row ``a``.

    Returns (counts, overflow); this backend is exact, so overflow is all False.
    """
    gens = np.asarray(gens, dtype=np.int64)
    degrees = np.asarray(degrees, dtype=np.int64)
    L, n = degrees.shape
    out = np.zeros((L, n + 1), dtype=np.int64)
    overflow = np.zeros(L, dtype=np.bool_)
    for l in range(L):
        a = degrees[l]
        supp = np.flatnonzero(a > 0)
        s = len(supp)
        below = gens[np.all(gens <= a, axis=1)]
        if len(below) == 0:
            continue
        # faces b (subsets of supp) with x^(a-b) in I: b inside {v : a_v > g_v}
        bits = 1 << np.arange(s, dtype=np.int64)
        allowed = ((below[:, supp] < a[supp]).astype(np.int64) * bits).sum(axis=1)
        common = np.bitwise_and.reduce(allowed)
        if s > 0 and common != 0:
            continue  # cone
        masks = np.arange(1 << s, dtype=np.int64)
        face = ((masks[:, None] & ~allowed[None, :]) == 0).any(axis=1)
        by_size = _faces_by_size(face, s)
        ranks = [0] * (s + 2)
        for q in range(1, s + 1):
            if by_size[q] and by_size[q - 1]:
                B = _boundary(by_size[q], by_size[q - 1], s)
                ranks[q] = rank_mod_p(B, p) if p else rank_bareiss(B)
        for q in range(0, s + 1):
            h = len(by_size[q]) - ranks[q] - ranks[q + 1]
            if h and q <= n:
                out[l, q] = h
    return out, overflow
