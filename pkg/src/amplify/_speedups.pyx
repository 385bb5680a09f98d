# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled search kernels: isomorphism backtracking and canonical labeling.

Mirrors ``_pykernels`` exactly, including candidate ordering, so both
backends return identical witnesses and permutations.  Limited to graphs
with at most 32 vertices (row bitmasks and packed corner segments must fit
in 64 bits); the dispatcher routes larger inputs to the pure backend.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

BACKEND = "cython"

MAX_VERTICES = 32


def find_isomorphism(int n, rows_g, rows_h, candidates):
    """See ``_pykernels.find_isomorphism``."""
    cdef uint64_t rg[32]
    cdef uint64_t rh[32]
    cdef uint64_t cand[32]
    cdef int phi[32]
    cdef int i
    if n == 0:
        return ()
    if n > 32:
        raise ValueError("compiled kernel supports at most 32 vertices")
    for i in range(n):
        rg[i] = rows_g[i]
        rh[i] = rows_h[i]
        cand[i] = candidates[i]
        phi[i] = -1
    if _iso_rec(0, n, rg, rh, cand, phi, 0):
        return tuple([phi[i] for i in range(n)])
    return None


cdef bint _iso_rec(int v, int n, uint64_t* rg, uint64_t* rh, uint64_t* cand,
                   int* phi, uint64_t used):
    cdef uint64_t m
    cdef int w, u, pu
    cdef bint ok
    if v == n:
        return True
    m = cand[v] & ~used
    while m:
        w = __builtin_ctzll(m)
        m &= m - 1
        ok = ((rg[v] >> v) & 1) == ((rh[w] >> w) & 1)
        if ok:
            for u in range(v):
                pu = phi[u]
                if ((rg[v] >> u) & 1) != ((rh[w] >> pu) & 1) or \
                   ((rg[u] >> v) & 1) != ((rh[pu] >> w) & 1):
                    ok = False
                    break
        if ok:
            phi[v] = w
            if _iso_rec(v + 1, n, rg, rh, cand, phi, used | (<uint64_t>1 << w)):
                return True
            phi[v] = -1
    return False


def canonical_perm(int n, rows):
    """See ``_pykernels.canonical_perm``."""
    cdef uint64_t r[32]
    cdef uint64_t seq[32]
    cdef uint64_t best_seq[32]
    cdef int prefix[32]
    cdef int best_perm[32]
    cdef int have_best = 0
    cdef int i
    if n == 0:
        return ()
    if n > 32:
        raise ValueError("compiled kernel supports at most 32 vertices")
    for i in range(n):
        r[i] = rows[i]
    _canon_rec(0, n, r, 0, seq, prefix, best_seq, best_perm, &have_best, -1)
    return tuple([best_perm[i] for i in range(n)])


cdef bint _canon_rec(int depth, int n, uint64_t* r, uint64_t used,
                     uint64_t* seq, int* prefix,
                     uint64_t* best_seq, int* best_perm, int* have_best,
                     int state):
    cdef uint64_t ev[32]
    cdef int vv[32]
    cdef uint64_t e
    cdef int i, v, a, cnt, idx, child_state
    cdef bint replaced = 0
    if depth == n:
        if not have_best[0] or state < 0:
            for i in range(n):
                best_seq[i] = seq[i]
                best_perm[i] = prefix[i]
            have_best[0] = 1
            return 1
        return 0
    cnt = 0
    for v in range(n):
        if (used >> v) & 1:
            continue
        e = 0
        for i in range(depth):
            a = prefix[i]
            e = (e << 1) | ((r[v] >> a) & 1)
        e = (e << 1) | ((r[v] >> v) & 1)
        for i in range(depth):
            a = prefix[i]
            e = (e << 1) | ((r[a] >> v) & 1)
        idx = cnt
        while idx > 0 and ev[idx - 1] > e:
            ev[idx] = ev[idx - 1]
            vv[idx] = vv[idx - 1]
            idx -= 1
        ev[idx] = e
        vv[idx] = v
        cnt += 1
    for i in range(cnt):
        e = ev[i]
        v = vv[i]
        if have_best[0] and state == 0:
            if e > best_seq[depth]:
                break
            child_state = 0 if e == best_seq[depth] else -1
        else:
            child_state = -1
        prefix[depth] = v
        seq[depth] = e
        if _canon_rec(depth + 1, n, r, used | (<uint64_t>1 << v), seq, prefix,
                      best_seq, best_perm, have_best, child_state):
            replaced = 1
            state = 0
    return replaced
