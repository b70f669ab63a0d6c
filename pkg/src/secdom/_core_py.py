"""Pure-Python search kernels.

Reference implementations of the exhaustive solvers.  The compiled module
`_core` mirrors this API and must return bit-identical results; the contract
for every function is a uniquely determined output (lexicographically least
witness under a fixed enumeration order), so the two backends are
interchangeable.  This module works for any vertex count; the compiled one
is limited to n <= 63 and the dispatcher in `backend` routes accordingly.
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

MAX_N = None  # no limit


def _closed(adj: Sequence[int], n: int) -> list[int]:
    return [adj[v] | (1 << v) for v in range(n)]


def alpha_size(adj: Sequence[int], n: int, cand: int) -> int:
    """Size of a maximum independent set inside the candidate mask."""
    nbc = _closed(adj, n)

    # greedy lower bound: take candidates in ascending order when possible
    best = 0
    taken = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if not (adj[v] & taken):
            taken |= low
            best += 1

    def rec(cand: int, cur: int) -> None:
        nonlocal best
        if cur + cand.bit_count() <= best:
            return
        if cand == 0:
            best = cur
            return
        # pivot on a maximum-degree candidate; an edgeless remainder is
        # swallowed whole
        pivot = -1
        pivot_deg = -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & cand).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = v
        if pivot_deg == 0:
            cur += cand.bit_count()
            if cur > best:
                best = cur
            return
        rec(cand & ~nbc[pivot], cur + 1)
        rec(cand & ~(1 << pivot), cur)

    rec(cand, 0)
    return best


def alpha_set_mask(adj: Sequence[int], n: int) -> int:
    """Lexicographically least maximum independent set, as a mask.

    Greedy prefix extension: vertex v joins iff some maximum independent
    set extends the current prefix through v, decided by re-solving the
    subproblem on the candidates above v.
    """
    full = (1 << n) - 1
    need = alpha_size(adj, n, full)
    chosen = 0
    cand = full
    for v in range(n):
        if need == 0:
            break
        if not (cand >> v) & 1:
            continue
        above = ~((1 << (v + 1)) - 1)
        sub = cand & ~(adj[v] | (1 << v)) & above
        if 1 + alpha_size(adj, n, sub) == need:
            chosen |= 1 << v
            cand = sub
            need -= 1
        else:
            cand &= ~(1 << v)
    return chosen


def min_dominating_mask(adj: Sequence[int], n: int) -> int:
    """First dominating set in (cardinality, lexicographic) order, as a mask."""
    if n == 0:
        return 0
    nbc = _closed(adj, n)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            for u in combo:
                cover |= nbc[u]
            if cover == full:
                m = 0
                for u in combo:
                    m |= 1 << u
                return m
    raise AssertionError("unreachable: V(G) dominates")


def min_secure_mask(adj: Sequence[int], n: int, k_start: int) -> int:
    """First secure dominating set in (cardinality, lexicographic) order.

    k_start lets the caller skip cardinalities below a known lower bound
    (the domination number); correctness only needs k_start <= the answer.
    """
    if n == 0:
        return 0
    nbc = _closed(adj, n)
    full = (1 << n) - 1
    pre = [0] * (n + 2)
    suf = [0] * (n + 2)
    for k in range(max(1, k_start), n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            for u in combo:
                cover |= nbc[u]
            if cover != full:
                continue
            smask = 0
            for u in combo:
                smask |= 1 << u
            # prefix/suffix unions let each "remove one member" coverage
            # be read off in O(1)
            for i in range(k):
                pre[i + 1] = pre[i] | nbc[combo[i]]
            suf[k] = 0
            for i in range(k - 1, -1, -1):
                suf[i] = suf[i + 1] | nbc[combo[i]]
            ok = True
            for v in range(n):
                if (smask >> v) & 1:
                    continue
                av = adj[v]
                nv = nbc[v]
                defended = False
                for i in range(k):
                    if (av >> combo[i]) & 1 and (pre[i] | suf[i + 1] | nv) == full:
                        defended = True
                        break
                if not defended:
                    ok = False
                    break
            if ok:
                return smask
    raise AssertionError("unreachable: V(G) is secure dominating")


@lru_cache(maxsize=None)
def _perms(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(k)))


def find_induced(gadj: Sequence[int], n: int, padj: Sequence[int], k: int) -> tuple[int, ...] | None:
    """First induced embedding of a k-vertex pattern, or None.

    Embeddings are scanned by ascending vertex subset, then by
    lexicographic assignment order within the subset; the returned tuple
    maps pattern vertex i to graph vertex tuple[i].
    """
    if k > n:
        return None
    if k <= 0:
        raise ValueError("pattern must have at least one vertex")
    perms = _perms(k)
    pairs = tuple((i, j, (padj[i] >> j) & 1) for i in range(k) for j in range(i + 1, k))
    for sub in combinations(range(n), k):
        for p in perms:
            ok = True
            for i, j, pb in pairs:
                if ((gadj[sub[p[i]]] >> sub[p[j]]) & 1) != pb:
                    ok = False
                    break
            if ok:
                return tuple(sub[p[i]] for i in range(k))
    return None
