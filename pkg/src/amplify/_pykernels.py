"""Pure-Python search kernels.

Reference implementations of the two hot combinatorial searches: adjacency
preserving bijection search and canonical relabeling.  The compiled twin in
``_speedups`` implements exactly the same algorithms (and the same
deterministic tie-breaking); this module is the fallback and also handles
graphs too large for the fixed-width compiled kernels.
"""

from __future__ import annotations

BACKEND = "pure"


def find_isomorphism(n, rows_g, rows_h, candidates):
    """Backtracking search for a bijection phi with G[v][w] == H[phi v][phi w].

    ``candidates[v]`` is a bitmask of admissible images for vertex ``v``;
    images are tried in increasing index order, so the first witness found is
    deterministic.  Returns a tuple ``phi`` or None.
    """
    if n == 0:
        return ()
    phi = [-1] * n

    def extend(v: int, used: int) -> bool:
        if v == n:
            return True
        m = candidates[v] & ~used
        row_v = rows_g[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if ((row_v >> v) & 1) != ((rows_h[w] >> w) & 1):
                continue
            ok = True
            for u in range(v):
                pu = phi[u]
                if ((row_v >> u) & 1) != ((rows_h[w] >> pu) & 1) or (
                    (rows_g[u] >> v) & 1
                ) != ((rows_h[pu] >> w) & 1):
                    ok = False
                    break
            if ok:
                phi[v] = w
                if extend(v + 1, used | (1 << w)):
                    return True
                phi[v] = -1
        return False

    return tuple(phi) if extend(0, 0) else None


def canonical_perm(n, rows):
    """Permutation (new position -> old vertex) minimizing the relabeled matrix.

    The matrix is compared in growing-corner order: placing position ``k``
    appends the packed segment [A[p_k][p_0..p_k], A[p_0..p_{k-1}][p_k]] and
    segments are compared as integers, which is lexicographic on the bits.
    Branch-and-bound over all placements, so the minimum is exact.
    """
    if n == 0:
        return ()
    best_have = False
    best_seq = [0] * n
    best_perm = [0] * n
    seq = [0] * n
    prefix = [0] * n

    def rec(depth: int, used: int, state: int) -> bool:
        # state 0: path segments equal the incumbent so far; -1: strictly
        # smaller at some earlier depth (or no incumbent yet).
        nonlocal best_have
        if depth == n:
            if not best_have or state < 0:
                best_seq[:] = seq
                best_perm[:] = prefix
                best_have = True
                return True
            return False
        cands = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            row_v = rows[v]
            e = 0
            for i in range(depth):
                e = (e << 1) | ((row_v >> prefix[i]) & 1)
            e = (e << 1) | ((row_v >> v) & 1)
            for i in range(depth):
                e = (e << 1) | ((rows[prefix[i]] >> v) & 1)
            cands.append((e, v))
        cands.sort()
        replaced = False
        for e, v in cands:
            if best_have and state == 0:
                if e > best_seq[depth]:
                    break
                child_state = 0 if e == best_seq[depth] else -1
            else:
                child_state = -1
            prefix[depth] = v
            seq[depth] = e
            if rec(depth + 1, used | (1 << v), child_state):
                replaced = True
                state = 0
        return replaced

    rec(0, 0, -1)
    return tuple(best_perm)
