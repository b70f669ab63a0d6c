# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled search kernels (n <= 63).

Bit-for-bit mirror of `_core_py`: every function returns the same uniquely
determined witness under the same enumeration order, just on C uint64
bitsets.  The dispatcher in `backend` sends larger inputs to the pure
module.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define SD_POPCNT(x) __builtin_popcountll(x)
    #define SD_CTZ(x) __builtin_ctzll(x)
    #else
    static int SD_POPCNT(unsigned long long x){int c=0;while(x){x&=x-1;++c;}return c;}
    static int SD_CTZ(unsigned long long x){int c=0;while(!(x&1ULL)){x>>=1;++c;}return c;}
    #endif
    """
    int SD_POPCNT(uint64_t x) nogil
    int SD_CTZ(uint64_t x) nogil

MAX_N = 63


cdef int _load(object masks, int n, uint64_t* out) except -1:
    cdef int i
    if n > 63:
        raise ValueError("compiled kernels support at most 63 vertices")
    for i in range(n):
        out[i] = <uint64_t> masks[i]
    return 0


cdef void _alpha_rec(uint64_t* adj, uint64_t* nbc, uint64_t cand, int cur, int* best) noexcept nogil:
    cdef int pivot, pivot_deg, v, d
    cdef uint64_t m, low
    if cur + SD_POPCNT(cand) <= best[0]:
        return
    if cand == 0:
        best[0] = cur
        return
    pivot = -1
    pivot_deg = -1
    m = cand
    while m:
        low = m & (~m + 1)
        v = SD_CTZ(low)
        m ^= low
        d = SD_POPCNT(adj[v] & cand)
        if d > pivot_deg:
            pivot_deg = d
            pivot = v
    if pivot_deg == 0:
        cur += SD_POPCNT(cand)
        if cur > best[0]:
            best[0] = cur
        return
    _alpha_rec(adj, nbc, cand & ~nbc[pivot], cur + 1, best)
    _alpha_rec(adj, nbc, cand & ~(<uint64_t>1 << pivot), cur, best)


cdef int _alpha_size(uint64_t* adj, uint64_t* nbc, int n, uint64_t cand) noexcept nogil:
    cdef int best = 0
    cdef uint64_t taken = 0, rest = cand, low
    cdef int v
    while rest:
        low = rest & (~rest + 1)
        v = SD_CTZ(low)
        rest ^= low
        if not (adj[v] & taken):
            taken |= low
            best += 1
    _alpha_rec(adj, nbc, cand, 0, &best)
    return best


def alpha_size(masks, int n, object cand) -> int:
    """Size of a maximum independent set inside the candidate mask."""
    cdef uint64_t adj[64]
    cdef uint64_t nbc[64]
    cdef int i
    _load(masks, n, adj)
    for i in range(n):
        nbc[i] = adj[i] | (<uint64_t>1 << i)
    return _alpha_size(adj, nbc, n, <uint64_t> cand)


def alpha_set_mask(masks, int n) -> int:
    """Lexicographically least maximum independent set, as a mask."""
    cdef uint64_t adj[64]
    cdef uint64_t nbc[64]
    cdef uint64_t full, cand, sub, above, chosen
    cdef int i, v, need
    _load(masks, n, adj)
    for i in range(n):
        nbc[i] = adj[i] | (<uint64_t>1 << i)
    if n == 0:
        return 0
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1
    need = _alpha_size(adj, nbc, n, full)
    chosen = 0
    cand = full
    for v in range(n):
        if need == 0:
            break
        if not (cand >> v) & <uint64_t>1:
            continue
        if v == 63:
            above = 0
        else:
            above = ~((<uint64_t>1 << (v + 1)) - 1)
        sub = cand & ~nbc[v] & above
        if 1 + _alpha_size(adj, nbc, n, sub) == need:
            chosen |= <uint64_t>1 << v
            cand = sub
            need -= 1
        else:
            cand &= ~(<uint64_t>1 << v)
    return int(chosen)


cdef bint _next_combo(int* c, int k, int n) noexcept nogil:
    # lexicographic successor of the ascending index tuple c
    cdef int i = k - 1, j
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def min_dominating_mask(masks, int n) -> int:
    """First dominating set in (cardinality, lexicographic) order, as a mask."""
    cdef uint64_t adj[64]
    cdef uint64_t nbc[64]
    cdef int c[64]
    cdef uint64_t full, cover, smask
    cdef int i, k
    cdef bint more
    if n == 0:
        return 0
    _load(masks, n, adj)
    for i in range(n):
        nbc[i] = adj[i] | (<uint64_t>1 << i)
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1
    for k in range(1, n + 1):
        for i in range(k):
            c[i] = i
        more = True
        while more:
            cover = 0
            for i in range(k):
                cover |= nbc[c[i]]
            if cover == full:
                smask = 0
                for i in range(k):
                    smask |= <uint64_t>1 << c[i]
                return int(smask)
            more = _next_combo(c, k, n)
    raise AssertionError("unreachable: V(G) dominates")


def min_secure_mask(masks, int n, int k_start) -> int:
    """First secure dominating set in (cardinality, lexicographic) order."""
    cdef uint64_t adj[64]
    cdef uint64_t nbc[64]
    cdef uint64_t pre[65]
    cdef uint64_t suf[65]
    cdef int c[64]
    cdef uint64_t full, cover, smask, av, nv
    cdef int i, k, v, u
    cdef bint more, ok, defended
    if n == 0:
        return 0
    _load(masks, n, adj)
    for i in range(n):
        nbc[i] = adj[i] | (<uint64_t>1 << i)
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0 - 1
    k = k_start
    if k < 1:
        k = 1
    for k in range(k, n + 1):
        for i in range(k):
            c[i] = i
        more = True
        while more:
            cover = 0
            for i in range(k):
                cover |= nbc[c[i]]
            if cover == full:
                smask = 0
                for i in range(k):
                    smask |= <uint64_t>1 << c[i]
                pre[0] = 0
                for i in range(k):
                    pre[i + 1] = pre[i] | nbc[c[i]]
                suf[k] = 0
                for i in range(k - 1, -1, -1):
                    suf[i] = suf[i + 1] | nbc[c[i]]
                ok = True
                for v in range(n):
                    if (smask >> v) & <uint64_t>1:
                        continue
                    av = adj[v]
                    nv = nbc[v]
                    defended = False
                    for i in range(k):
                        u = c[i]
                        if (av >> u) & <uint64_t>1 and (pre[i] | suf[i + 1] | nv) == full:
                            defended = True
                            break
                    if not defended:
                        ok = False
                        break
                if ok:
                    return int(smask)
            more = _next_combo(c, k, n)
    raise AssertionError("unreachable: V(G) is secure dominating")


cdef bint _next_perm(int* p, int k) noexcept nogil:
    cdef int i = k - 2, j, t, a, b
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = k - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    a = i + 1; b = k - 1
    while a < b:
        t = p[a]; p[a] = p[b]; p[b] = t
        a += 1; b -= 1
    return True


def find_induced(gmasks, int n, pmasks, int k) -> object:
    """First induced embedding of a k-vertex pattern, or None.

    Subsets ascend, assignments within a subset follow lexicographic
    order; identical to the pure kernel.
    """
    cdef uint64_t gadj[64]
    cdef uint64_t padj[8]
    cdef int c[8]
    cdef int p[8]
    cdef int i, j, t
    cdef bint more_sub, more_perm, ok
    if k <= 0:
        raise ValueError("pattern must have at least one vertex")
    if k > n:
        return None
    if k > 8:
        raise ValueError("compiled pattern search supports at most 8 pattern vertices")
    _load(gmasks, n, gadj)
    for i in range(k):
        padj[i] = <uint64_t> pmasks[i]
    for i in range(k):
        c[i] = i
    more_sub = True
    while more_sub:
        for i in range(k):
            p[i] = i
        more_perm = True
        while more_perm:
            ok = True
            for i in range(k):
                if not ok:
                    break
                for j in range(i + 1, k):
                    if ((padj[i] >> j) & <uint64_t>1) != ((gadj[c[p[i]]] >> c[p[j]]) & <uint64_t>1):
                        ok = False
                        break
            if ok:
                return tuple(c[p[t]] for t in range(k))
            more_perm = _next_perm(p, k)
        more_sub = _next_combo(c, k, n)
    return None
