"""numba kernels. Same contracts as ``_py``."""
import numpy as np
from numba import njit

NAME = "numba"

# |x|, |y| below this keep x*y - u*v inside int64
_SAFE = 2_000_000_000


@njit(cache=True)
def _minimal_mask(rows):
    N, n = rows.shape
    keep = np.zeros(N, dtype=np.bool_)
    kept = np.empty(N, dtype=np.int64)
    nk = 0
    for r in range(N):
        divided = False
        for t in range(nk):
            g = kept[t]
            ok = True
            for v in range(n):
                if rows[g, v] > rows[r, v]:
                    ok = False
                    break
            if ok:
                divided = True
                break
        if not divided:
            keep[r] = True
            kept[nk] = r
            nk += 1
    return keep


def minimal_mask(rows):
    return _minimal_mask(np.ascontiguousarray(rows, dtype=np.int64))


@njit(cache=True)
def _lcm_closure(gens, radix, cap):
    G, n = gens.shape
    seen = set()
    buf = np.empty((max(G, 16), n), dtype=np.int64)
    size = 0
    for g in range(G):
        code = 0
        for v in range(n):
            code += gens[g, v] * radix[v]
        if code not in seen:
            seen.add(code)
            buf[size] = gens[g]
            size += 1
            if size > cap:
                return buf[:0].copy(), False
    head = 0
    y = np.empty(n, dtype=np.int64)
    while head < size:
        for g in range(G):
            code = 0
            for v in range(n):
                y[v] = max(buf[head, v], gens[g, v])
                code += y[v] * radix[v]
            if code not in seen:
                seen.add(code)
                if size == buf.shape[0]:
                    grown = np.empty((2 * size, n), dtype=np.int64)
                    grown[:size] = buf
                    buf = grown
                buf[size] = y
                size += 1
                if size > cap:
                    return buf[:0].copy(), False
        head += 1
    return buf[:size].copy(), True


def lcm_closure(gens, cap):
    """All lcms of nonempty generator subsets. Returns (rows, ok)."""
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    n = gens.shape[1]
    base = gens.max(axis=0) + 1 if len(gens) else np.ones(n, dtype=np.int64)
    radix = np.ones(n, dtype=np.int64)
    box = 1
    for v in range(n):
        radix[v] = box
        box *= int(base[v])
    if box >= 2**62:
        from . import _py
        return _py.lcm_closure(gens, cap)
    return _lcm_closure(gens, radix, cap)


@njit(cache=True)
def _basic_covers(inc, k, cap):
    nf, n = inc.shape
    last = np.full(nf, -1, dtype=np.int64)
    for f in range(nf):
        for v in range(n):
            if inc[f, v]:
                last[f] = v
    nfac = np.zeros(n, dtype=np.int64)
    nclose = np.zeros(n, dtype=np.int64)
    done_at = np.full(n, -1, dtype=np.int64)
    for v in range(n):
        for f in range(nf):
            if inc[f, v]:
                nfac[v] += 1
                if last[f] == v:
                    nclose[v] += 1
                if last[f] > done_at[v]:
                    done_at[v] = last[f]
    fsum = np.zeros(nf, dtype=np.int64)
    alpha = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    out = np.empty((64, n), dtype=np.int64)
    cnt = 0
    v = 0
    entering = True
    while v >= 0:
        if entering:
            if v == n:
                if cnt == out.shape[0]:
                    grown = np.empty((2 * cnt, n), dtype=np.int64)
                    grown[:cnt] = out
                    out = grown
                out[cnt] = alpha
                cnt += 1
                if cnt > cap:
                    return out[:0].copy(), False
                v -= 1
                entering = False
                continue
            lo = 0
            if nfac[v] > 0:
                for f in range(nf):
                    if inc[f, v] and last[f] == v:
                        need = k - fsum[f]
                        if need > lo:
                            lo = need
                hi[v] = lo if nclose[v] == nfac[v] else k
            else:
                hi[v] = 0
            # sits one below lo; the advance step below lifts it
            for f in range(nf):
                if inc[f, v]:
                    fsum[f] += lo - 1
            alpha[v] = lo - 1
            entering = False
        # advance vertex v to its next candidate value
        if alpha[v] >= hi[v]:
            for f in range(nf):
                if inc[f, v]:
                    fsum[f] -= alpha[v]
            alpha[v] = 0
            v -= 1
            continue
        alpha[v] += 1
        for f in range(nf):
            if inc[f, v]:
                fsum[f] += 1
        ok = True
        for u in range(v + 1):
            if done_at[u] == v and alpha[u] > 0:
                tight = False
                for f in range(nf):
                    if inc[f, u] and fsum[f] == k:
                        tight = True
                        break
                if not tight:
                    ok = False
                    break
        if ok:
            v += 1
            entering = True
    return out[:cnt].copy(), True


def basic_covers(inc, k, cap):
    """Depth-first search for basic k-covers. Returns (rows, ok)."""
    inc = np.ascontiguousarray(inc, dtype=np.bool_)
    return _basic_covers(inc, np.int64(k), np.int64(cap))


@njit(cache=True)
def _inv_mod(a, p):
    r = 1
    e = p - 2
    b = a % p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


@njit(cache=True)
def _rank_mod_p(M, p):
    A = M.copy()
    rows, cols = A.shape
    for i in range(rows):
        for j in range(cols):
            A[i, j] %= p
            if A[i, j] < 0:
                A[i, j] += p
    r = 0
    for c in range(cols):
        if r == rows:
            break
        q = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                q = i
                break
        if q < 0:
            continue
        if q != r:
            for j in range(cols):
                t = A[r, j]
                A[r, j] = A[q, j]
                A[q, j] = t
        inv = _inv_mod(A[r, c], p)
        for j in range(c, cols):
            A[r, j] = (A[r, j] * inv) % p
        for i in range(r + 1, rows):
            f = A[i, c]
            if f != 0:
                for j in range(c, cols):
                    A[i, j] = (A[i, j] - f * A[r, j]) % p
        r += 1
    return r


def rank_mod_p(M, p):
    """Rank over GF(p)."""
    return int(_rank_mod_p(np.ascontiguousarray(M, dtype=np.int64), np.int64(p)))


@njit(cache=True)
def _rank_bareiss(M):
    A = M.copy()
    rows, cols = A.shape
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        q = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                q = i
                break
        if q < 0:
            continue
        if q != r:
            for j in range(cols):
                t = A[r, j]
                A[r, j] = A[q, j]
                A[q, j] = t
        piv = A[r, c]
        if abs(piv) > _SAFE:
            return -1
        for i in range(r + 1, rows):
            a_ic = A[i, c]
            if abs(a_ic) > _SAFE:
                return -1
            for j in range(c + 1, cols):
                x = A[i, j]
                y = A[r, j]
                if abs(x) > _SAFE or abs(y) > _SAFE:
                    return -1
                A[i, j] = (x * piv - a_ic * y) // prev
            A[i, c] = 0
        prev = piv
        r += 1
    return r


def rank_bareiss(M):
    """Exact rational rank; -1 when int64 headroom would be exceeded."""
    return int(_rank_bareiss(np.ascontiguousarray(M, dtype=np.int64)))


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _betti_one(gens, a, p, out_row):
    G, n = gens.shape
    supp = np.empty(n, dtype=np.int64)
    s = 0
    for v in range(n):
        if a[v] > 0:
            supp[s] = v
            s += 1
    allowed = np.empty(G, dtype=np.int64)
    na = 0
    for g in range(G):
        divides = True
        for v in range(n):
            if gens[g, v] > a[v]:
                divides = False
                break
        if not divides:
            continue
        m = 0
        for t in range(s):
            if gens[g, supp[t]] < a[supp[t]]:
                m |= 1 << t
        allowed[na] = m
        na += 1
    if na == 0:
        return True
    common = allowed[0]
    for t in range(1, na):
        common &= allowed[t]
    if s > 0 and common != 0:
        return True  # cone
    nm = 1 << s
    size_of = np.empty(nm, dtype=np.int64)
    index = np.full(nm, -1, dtype=np.int64)
    count = np.zeros(s + 2, dtype=np.int64)
    for mask in range(nm):
        size_of[mask] = _popcount(mask)
        for t in range(na):
            if mask & ~allowed[t] == 0:
                q = size_of[mask]
                index[mask] = count[q]
                count[q] += 1
                break
    ranks = np.zeros(s + 2, dtype=np.int64)
    for q in range(1, s + 1):
        if count[q] == 0 or count[q - 1] == 0:
            continue
        B = np.zeros((count[q - 1], count[q]), dtype=np.int64)
        for mask in range(nm):
            if size_of[mask] != q or index[mask] < 0:
                continue
            pos = 0
            for t in range(s):
                if mask >> t & 1:
                    B[index[mask ^ (1 << t)], index[mask]] = -1 if pos & 1 else 1
                    pos += 1
        if p == 0:
            rk = _rank_bareiss(B)
            if rk < 0:
                return False
        else:
            rk = _rank_mod_p(B, p)
        ranks[q] = rk
    for q in range(s + 1):
        h = count[q] - ranks[q] - ranks[q + 1]
        if h != 0 and q <= n:
            out_row[q] = h
    return True


@njit(cache=True)
def _betti_at(gens, degrees, p):
    L, n = degrees.shape
    out = np.zeros((L, n + 1), dtype=np.int64)
    overflow = np.zeros(L, dtype=np.bool_)
    for l in range(L):
        if not _betti_one(gens, degrees[l], p, out[l]):
            overflow[l] = True
            out[l, :] = 0
    return out, overflow


def betti_at(gens, degrees, p):
    """Betti numbers beta_{i,a} for i = 0..n at each multidegree row ``a``.

    Rows flagged in ``overflow`` hit the int64 guard of the exact rank and
    must be recomputed with unbounded integers.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    degrees = np.ascontiguousarray(degrees, dtype=np.int64)
    return _betti_at(gens, degrees, np.int64(p))
