# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: same contract as _purecore, word-at-a-time loops.

The two backends are cross-checked by the test suite; any semantic
difference (certificate order, acceptance decisions, survivors) is a
bug here, not a tolerance.
"""

from libc.stdlib cimport malloc, free, realloc
from libc.string cimport memcpy

from ._purecore import BudgetExceeded

cdef extern from *:
    """
    #include <stdint.h>
    static inline int popcnt64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int popcnt64(unsigned long long x) nogil
    int ctz64(unsigned long long x) nogil

BACKEND_NAME = "fast"

MODE_ALL = 0
MODE_TRIANGLE_FREE = 1
MODE_MAX_DEGREE_3 = 2

cdef unsigned long long ONE = 1
cdef int MAXN = 64
DEF CMAXN = 64
DEF QCAP = 256


cdef inline unsigned long long _full_mask(int n) noexcept nogil:
    if n == 64:
        return <unsigned long long> 0xFFFFFFFFFFFFFFFF
    return (ONE << n) - 1


# ---------------------------------------------------------------------------
# Canonical labelling.
# ---------------------------------------------------------------------------

cdef struct CState:
    int n
    unsigned long long *adj
    unsigned long long best_cert[CMAXN]
    int best_pos[CMAXN]
    int has_best
    unsigned long long first_cert[CMAXN]
    int first_pos[CMAXN]
    int has_first
    int *gens          # flattened perms, gens[g*CMAXN + v]
    int ngens
    int gens_cap
    int overflow
    int fixed[CMAXN]
    int nfixed
    int first_seq[CMAXN]
    int first_len


cdef void _refine(int n, unsigned long long *adj,
                  unsigned long long *cells, int *pncells,
                  unsigned long long *queue, int qlen) noexcept nogil:
    cdef int qi = 0, i, j, v, d, dmin, dmax, nfrag
    cdef int ncells = pncells[0]
    cdef unsigned long long splitter, cell, m
    cdef unsigned long long bucket[CMAXN + 1]
    while qi < qlen:
        splitter = queue[qi]
        qi += 1
        i = 0
        while i < ncells:
            cell = cells[i]
            if popcnt64(cell) > 1:
                dmin = CMAXN + 1
                dmax = -1
                m = cell
                while m:
                    v = ctz64(m)
                    m &= m - 1
                    d = popcnt64(adj[v] & splitter)
                    if d < dmin:
                        dmin = d
                    if d > dmax:
                        dmax = d
                if dmax > dmin:
                    for d in range(dmin, dmax + 1):
                        bucket[d] = 0
                    m = cell
                    while m:
                        v = ctz64(m)
                        m &= m - 1
                        bucket[popcnt64(adj[v] & splitter)] |= ONE << v
                    nfrag = 0
                    for d in range(dmin, dmax + 1):
                        if bucket[d]:
                            nfrag += 1
                    for j in range(ncells - 1, i, -1):
                        cells[j + nfrag - 1] = cells[j]
                    j = i
                    for d in range(dmin, dmax + 1):
                        if bucket[d]:
                            cells[j] = bucket[d]
                            queue[qlen] = bucket[d]
                            qlen += 1
                            j += 1
                    ncells += nfrag - 1
                    i += nfrag - 1
            i += 1
    pncells[0] = ncells


cdef int _leaf(CState *st, unsigned long long *cells, int ncells) noexcept nogil:
    # Returns an unwind depth, or n+1 for none.  A leaf matching the
    # first leaf's certificate yields an automorphism mapping this
    # branch onto the first path at their first divergence; the jump
    # target is verified explicitly before use, never assumed.
    cdef int n = st.n
    cdef int unwind = n + 1
    cdef int pos[CMAXN]
    cdef int inv_first[CMAXN]
    cdef int perm[CMAXN]
    cdef unsigned long long cert[CMAXN]
    cdef unsigned long long m, row
    cdef int p, v, w, is_id, differs, cmp_best, i, d, okj
    for p in range(ncells):
        pos[ctz64(cells[p])] = p
    for v in range(n):
        row = 0
        m = st.adj[v]
        while m:
            w = ctz64(m)
            m &= m - 1
            row |= ONE << pos[w]
        cert[pos[v]] = row
    if not st.has_first:
        st.has_first = 1
        memcpy(st.first_cert, cert, n * sizeof(unsigned long long))
        memcpy(st.first_pos, pos, n * sizeof(int))
        memcpy(st.first_seq, st.fixed, st.nfixed * sizeof(int))
        st.first_len = st.nfixed
    else:
        differs = 0
        for i in range(n):
            if cert[i] != st.first_cert[i]:
                differs = 1
                break
        if differs == 0:
            for v in range(n):
                inv_first[st.first_pos[v]] = v
            is_id = 1
            for v in range(n):
                perm[v] = inv_first[pos[v]]
                if perm[v] != v:
                    is_id = 0
            if not is_id:
                if st.ngens >= st.gens_cap:
                    st.overflow = 1
                else:
                    memcpy(st.gens + st.ngens * CMAXN, perm, n * sizeof(int))
                    st.ngens += 1
                if st.nfixed == st.first_len:
                    d = -1
                    for i in range(st.nfixed):
                        if st.fixed[i] != st.first_seq[i]:
                            d = i
                            break
                    if d >= 0 and perm[st.fixed[d]] == st.first_seq[d]:
                        okj = 1
                        for i in range(d):
                            if perm[st.fixed[i]] != st.fixed[i]:
                                okj = 0
                                break
                        if okj:
                            unwind = d
    if not st.has_best:
        st.has_best = 1
        memcpy(st.best_cert, cert, n * sizeof(unsigned long long))
        memcpy(st.best_pos, pos, n * sizeof(int))
        return unwind
    cmp_best = 0
    for i in range(n):
        if cert[i] < st.best_cert[i]:
            cmp_best = -1
            break
        if cert[i] > st.best_cert[i]:
            cmp_best = 1
            break
    if cmp_best < 0:
        memcpy(st.best_cert, cert, n * sizeof(unsigned long long))
        memcpy(st.best_pos, pos, n * sizeof(int))
    return unwind


cdef inline int _uf_find(int *rep, int x) noexcept nogil:
    cdef int root = x, t
    while rep[root] != root:
        root = rep[root]
    while rep[x] != root:
        t = rep[x]
        rep[x] = root
        x = t
    return root


cdef void _orbit_reps_fixing(CState *st, int *rep) noexcept nogil:
    cdef int n = st.n
    cdef int v, gi, t, ok, a, b
    cdef int *g
    for v in range(n):
        rep[v] = v
    for gi in range(st.ngens):
        g = st.gens + gi * CMAXN
        ok = 1
        for t in range(st.nfixed):
            if g[st.fixed[t]] != st.fixed[t]:
                ok = 0
                break
        if not ok:
            continue
        for v in range(n):
            a = _uf_find(rep, v)
            b = _uf_find(rep, g[v])
            if a != b:
                if a < b:
                    rep[b] = a
                else:
                    rep[a] = b
    for v in range(n):
        rep[v] = _uf_find(rep, v)


cdef int _search(CState *st, unsigned long long *cells, int ncells) noexcept nogil:
    cdef int n = st.n
    cdef int depth = st.nfixed
    cdef int target = -1, tsize = CMAXN + 1, i, sz, u, t, skip, nc2, r
    cdef unsigned long long cell, m, bit
    cdef unsigned long long child[CMAXN]
    cdef unsigned long long queue[QCAP]
    cdef int tried[CMAXN]
    cdef int rep[CMAXN]
    cdef int ntried = 0
    for i in range(ncells):
        sz = popcnt64(cells[i])
        if 1 < sz < tsize:
            tsize = sz
            target = i
    if target < 0:
        return _leaf(st, cells, ncells)
    cell = cells[target]
    m = cell
    while m:
        u = ctz64(m)
        m &= m - 1
        bit = ONE << u
        if ntried:
            _orbit_reps_fixing(st, rep)
            skip = 0
            for t in range(ntried):
                if rep[u] == rep[tried[t]]:
                    skip = 1
                    break
            if skip:
                tried[ntried] = u
                ntried += 1
                continue
        memcpy(child, cells, target * sizeof(unsigned long long))
        child[target] = bit
        child[target + 1] = cell ^ bit
        if ncells - target - 1 > 0:
            memcpy(child + target + 2, cells + target + 1,
                   (ncells - target - 1) * sizeof(unsigned long long))
        nc2 = ncells + 1
        queue[0] = bit
        queue[1] = cell ^ bit
        _refine(n, st.adj, child, &nc2, queue, 2)
        st.fixed[st.nfixed] = u
        st.nfixed += 1
        r = _search(st, child, nc2)
        st.nfixed -= 1
        tried[ntried] = u
        ntried += 1
        if r < depth:
            return r
    return n + 1


cdef int _canon_core(int n, unsigned long long *adj, CState *st) noexcept nogil:
    cdef unsigned long long cells[CMAXN]
    cdef unsigned long long queue[QCAP]
    cdef int ncells = 1
    st.n = n
    st.adj = adj
    st.has_best = 0
    st.has_first = 0
    st.ngens = 0
    st.overflow = 0
    st.nfixed = 0
    cells[0] = _full_mask(n)
    queue[0] = cells[0]
    _refine(n, adj, cells, &ncells, queue, 1)
    _search(st, cells, ncells)
    return st.overflow


cdef int _canon_retry(int n, unsigned long long *adj, CState *st) except -1:
    """Run the search, growing the generator buffer on overflow."""
    cdef int cap = 128
    st.gens = <int *> malloc(cap * CMAXN * sizeof(int))
    if st.gens == NULL:
        raise MemoryError()
    st.gens_cap = cap
    while True:
        if _canon_core(n, adj, st) == 0:
            return 0
        cap *= 2
        free(st.gens)
        st.gens = <int *> malloc(cap * CMAXN * sizeof(int))
        if st.gens == NULL:
            raise MemoryError()
        st.gens_cap = cap


cdef void _orbit_reps_all(CState *st, int *rep) noexcept nogil:
    cdef int save = st.nfixed
    st.nfixed = 0
    _orbit_reps_fixing(st, rep)
    st.nfixed = save


def canon(int n, adj):
    """(cert, pos, orbit, gens) exactly as the pure backend returns them."""
    if n == 0:
        return (), [], [], []
    cdef unsigned long long cadj[CMAXN]
    cdef int i, v, gi
    for i in range(n):
        cadj[i] = adj[i]
    cdef CState st
    _canon_retry(n, cadj, &st)
    cdef int rep[CMAXN]
    _orbit_reps_all(&st, rep)
    cert = tuple(st.best_cert[i] for i in range(n))
    pos = [st.best_pos[i] for i in range(n)]
    orbit = [rep[i] for i in range(n)]
    gens = []
    for gi in range(st.ngens):
        gens.append([st.gens[gi * CMAXN + v] for v in range(n)])
    free(st.gens)
    return cert, pos, orbit, gens


# ---------------------------------------------------------------------------
# Cliques.
# ---------------------------------------------------------------------------

cdef struct CliqueCtx:
    unsigned long long adj[CMAXN]
    int best


cdef void _mc_expand(CliqueCtx *cc, int size, unsigned long long pool) noexcept nogil:
    cdef int order[CMAXN]
    cdef int bounds[CMAXN]
    cdef int cnt = 0, colour = 0, v, i
    cdef unsigned long long remaining = pool, avail, nxt
    while remaining:
        colour += 1
        avail = remaining
        while avail:
            v = ctz64(avail)
            order[cnt] = v
            bounds[cnt] = colour
            cnt += 1
            avail &= ~cc.adj[v]
            avail &= ~(ONE << v)
            remaining &= ~(ONE << v)
    for i in range(cnt - 1, -1, -1):
        if size + bounds[i] <= cc.best:
            return
        v = order[i]
        nxt = pool & cc.adj[v]
        if nxt:
            _mc_expand(cc, size + 1, nxt)
        elif size + 1 > cc.best:
            cc.best = size + 1
        pool &= ~(ONE << v)


def max_clique(int n, adj, int lb=0):
    if n == 0:
        return 0
    cdef CliqueCtx cc
    cdef int i
    for i in range(n):
        cc.adj[i] = adj[i]
    cc.best = lb
    _mc_expand(&cc, 0, _full_mask(n))
    return cc.best


cdef struct BKCtx:
    unsigned long long adj[CMAXN]
    unsigned long long *out
    int nout
    int cap


cdef int _bk(BKCtx *bk, unsigned long long r, unsigned long long p,
             unsigned long long x) except -1:
    cdef int pivot = -1, pivot_cnt = -1, u, c, v
    cdef unsigned long long m, cand, bit
    if p == 0 and x == 0:
        if bk.nout >= bk.cap:
            bk.cap *= 2
            bk.out = <unsigned long long *> realloc(
                bk.out, bk.cap * sizeof(unsigned long long))
            if bk.out == NULL:
                raise MemoryError()
        bk.out[bk.nout] = r
        bk.nout += 1
        return 0
    m = p | x
    while m:
        u = ctz64(m)
        m &= m - 1
        c = popcnt64(p & bk.adj[u])
        if c > pivot_cnt:
            pivot_cnt = c
            pivot = u
    cand = p & ~bk.adj[pivot]
    while cand:
        v = ctz64(cand)
        cand &= cand - 1
        bit = ONE << v
        _bk(bk, r | bit, p & bk.adj[v], x & bk.adj[v])
        p &= ~bit
        x |= bit
    return 0


def maximal_cliques(int n, adj):
    if n == 0:
        return []
    cdef BKCtx bk
    cdef int i
    for i in range(n):
        bk.adj[i] = adj[i]
    bk.cap = 64
    bk.nout = 0
    bk.out = <unsigned long long *> malloc(bk.cap * sizeof(unsigned long long))
    if bk.out == NULL:
        raise MemoryError()
    try:
        _bk(&bk, 0, _full_mask(n), 0)
        return [bk.out[i] for i in range(bk.nout)]
    finally:
        free(bk.out)


cdef int _greedy_indep(unsigned long long *adj, unsigned long long mask) noexcept nogil:
    cdef int cnt = 0, v
    while mask:
        v = ctz64(mask)
        cnt += 1
        mask &= ~adj[v]
        mask &= ~(ONE << v)
    return cnt


cdef struct CoverCtx:
    unsigned long long adj[CMAXN]
    unsigned long long full
    unsigned long long *cliques
    int ncl
    int *member
    int member_off[CMAXN + 1]
    int best
    int lb


cdef void _cover_search(CoverCtx *ct, unsigned long long covered, int used) noexcept nogil:
    cdef unsigned long long rem, m
    cdef int v, branch_v = -1, branch_opts, c, i
    if covered == ct.full:
        if used < ct.best:
            ct.best = used
        return
    rem = ct.full & ~covered
    if used + _greedy_indep(ct.adj, rem) >= ct.best:
        return
    branch_opts = 1 << 30
    m = rem
    while m:
        v = ctz64(m)
        m &= m - 1
        c = ct.member_off[v + 1] - ct.member_off[v]
        if c < branch_opts:
            branch_opts = c
            branch_v = v
    for i in range(ct.member_off[branch_v], ct.member_off[branch_v + 1]):
        _cover_search(ct, covered | ct.cliques[ct.member[i]], used + 1)
        if ct.best <= ct.lb:
            return


def clique_cover(int n, adj, int lb=0):
    if n == 0:
        return 0
    cliques_py = maximal_cliques(n, adj)
    cdef CoverCtx ct
    cdef int i, v, ci, ub, gi_lb
    cdef unsigned long long covered, bestc, m
    ct.member = NULL
    ct.cliques = NULL
    for i in range(n):
        ct.adj[i] = adj[i]
    ct.full = _full_mask(n)
    ct.ncl = len(cliques_py)
    ct.cliques = <unsigned long long *> malloc(ct.ncl * sizeof(unsigned long long))
    cdef int *counts = <int *> malloc(n * sizeof(int))
    if ct.cliques == NULL or counts == NULL:
        raise MemoryError()
    for ci in range(ct.ncl):
        ct.cliques[ci] = cliques_py[ci]
    try:
        for v in range(n):
            counts[v] = 0
        for ci in range(ct.ncl):
            m = ct.cliques[ci]
            while m:
                v = ctz64(m)
                m &= m - 1
                counts[v] += 1
        ct.member_off[0] = 0
        for v in range(n):
            ct.member_off[v + 1] = ct.member_off[v] + counts[v]
        ct.member = <int *> malloc(ct.member_off[n] * sizeof(int))
        if ct.member == NULL:
            raise MemoryError()
        for v in range(n):
            counts[v] = 0
        for ci in range(ct.ncl):
            m = ct.cliques[ci]
            while m:
                v = ctz64(m)
                m &= m - 1
                ct.member[ct.member_off[v] + counts[v]] = ci
                counts[v] += 1
        covered = 0
        ub = 0
        while covered != ct.full:
            bestc = 0
            for ci in range(ct.ncl):
                if popcnt64(ct.cliques[ci] & ~covered) > popcnt64(bestc & ~covered):
                    bestc = ct.cliques[ci]
            covered |= bestc
            ub += 1
        ct.best = ub
        ct.lb = lb
        gi_lb = _greedy_indep(ct.adj, ct.full)
        if gi_lb > ct.lb:
            ct.lb = gi_lb
        if ct.best > ct.lb:
            _cover_search(&ct, 0, 0)
        return ct.best
    finally:
        free(ct.cliques)
        free(counts)
        if ct.member != NULL:
            free(ct.member)


# ---------------------------------------------------------------------------
# Dominating sets and the eternal fixpoint.
# ---------------------------------------------------------------------------

cdef struct DomCtx:
    unsigned long long closed[CMAXN]
    unsigned long long suffix[CMAXN + 1]
    unsigned long long full
    int n


cdef void _dom_init(DomCtx *dc, int n, adj):
    cdef int i
    dc.n = n
    dc.full = _full_mask(n)
    for i in range(n):
        dc.closed[i] = <unsigned long long> adj[i] | (ONE << i)
    dc.suffix[n] = 0
    for i in range(n - 1, -1, -1):
        dc.suffix[i] = dc.suffix[i + 1] | dc.closed[i]


cdef long long _dom_enum(DomCtx *dc, int i, int left, unsigned long long cov,
                         unsigned long long cur, list out, long long count,
                         long long cap) except? -7:
    if (cov | dc.suffix[i]) != dc.full:
        return count
    if left == 0:
        if cov == dc.full:
            count += 1
            if out is not None and count <= cap:
                out.append(cur)
        return count
    if dc.n - i < left:
        return count
    count = _dom_enum(dc, i + 1, left - 1, cov | dc.closed[i],
                      cur | (ONE << i), out, count, cap)
    return _dom_enum(dc, i + 1, left, cov, cur, out, count, cap)


def dominating_sets(int n, adj, int k, long long cap=1 << 26):
    if n == 0:
        return []
    cdef DomCtx dc
    _dom_init(&dc, n, adj)
    out = []
    cdef long long count = _dom_enum(&dc, 0, k, 0, 0, out, 0, cap)
    if count > cap:
        raise BudgetExceeded(
            f"{count} dominating {k}-sets exceed the configured cap {cap}", count
        )
    out.sort()
    return out


def count_dominating_sets(int n, adj, int k):
    if n == 0:
        return 0
    cdef DomCtx dc
    _dom_init(&dc, n, adj)
    return _dom_enum(&dc, 0, k, 0, 0, None, 0, 0)


cdef int _dom_exists(DomCtx *dc, int i, int left, unsigned long long cov) noexcept nogil:
    if cov == dc.full:
        return 1
    if left == 0 or (cov | dc.suffix[i]) != dc.full or dc.n - i < left:
        return 0
    if _dom_exists(dc, i + 1, left - 1, cov | dc.closed[i]):
        return 1
    return _dom_exists(dc, i + 1, left, cov)


def exists_dominating_set(int n, adj, int k):
    if n == 0:
        return True
    cdef DomCtx dc
    _dom_init(&dc, n, adj)
    return bool(_dom_exists(&dc, 0, k, 0))


def domination_number(int n, adj):
    if n == 0:
        return 0
    cdef DomCtx dc
    _dom_init(&dc, n, adj)
    cdef int maxc = 0, i, k
    for i in range(n):
        if popcnt64(dc.closed[i]) > maxc:
            maxc = popcnt64(dc.closed[i])
    k = (n + maxc - 1) // maxc
    while not _dom_exists(&dc, 0, k, 0):
        k += 1
    return k


cdef inline long long _ht_lookup(unsigned long long *keys, long long *table,
                                 long long tmask, unsigned long long x) noexcept nogil:
    cdef unsigned long long h = x * (<unsigned long long> 0x9E3779B97F4A7C15)
    cdef long long slot = <long long> (h & <unsigned long long> tmask)
    cdef long long idx
    while True:
        idx = table[slot]
        if idx == -1:
            return -1
        if keys[idx] == x:
            return idx
        slot = (slot + 1) & tmask


def eternal_fixpoint(int n, adj, int k, configs):
    """Surviving dominating k-sets under the one-guard defence closure."""
    cdef long long m = len(configs)
    if m == 0:
        return []
    if k >= n:
        return list(configs)
    cdef unsigned long long full = _full_mask(n)
    cdef unsigned long long cadj[CMAXN]
    cdef int i
    for i in range(n):
        cadj[i] = adj[i]
    cdef long long tsize = 1
    while tsize < 2 * m:
        tsize <<= 1
    cdef long long tmask = tsize - 1
    cdef unsigned long long *keys = <unsigned long long *> malloc(
        m * sizeof(unsigned long long))
    cdef long long *table = <long long *> malloc(tsize * sizeof(long long))
    cdef short *counts = <short *> malloc(m * n * sizeof(short))
    cdef char *alive = <char *> malloc(m)
    cdef long long *dead = <long long *> malloc(m * sizeof(long long))
    if keys == NULL or table == NULL or counts == NULL or alive == NULL or dead == NULL:
        if keys != NULL: free(keys)
        if table != NULL: free(table)
        if counts != NULL: free(counts)
        if alive != NULL: free(alive)
        if dead != NULL: free(dead)
        raise MemoryError()
    cdef long long ci, ndead = 0, slot, xi
    cdef unsigned long long hx, xmask, attacks, am, wm, ymask, rest
    cdef int x, w, c, ok, v
    try:
        for ci in range(tsize):
            table[ci] = -1
        for ci in range(m):
            keys[ci] = configs[ci]
        for ci in range(m):
            hx = keys[ci] * (<unsigned long long> 0x9E3779B97F4A7C15)
            slot = <long long> (hx & <unsigned long long> tmask)
            while table[slot] != -1:
                slot = (slot + 1) & tmask
            table[slot] = ci
        with nogil:
            for ci in range(m):
                alive[ci] = 1
                xmask = keys[ci]
                ok = 1
                attacks = full & ~xmask
                am = attacks
                while am:
                    x = ctz64(am)
                    am &= am - 1
                    c = 0
                    wm = cadj[x] & xmask
                    while wm:
                        w = ctz64(wm)
                        wm &= wm - 1
                        if _ht_lookup(keys, table, tmask,
                                      (xmask ^ (ONE << w)) | (ONE << x)) >= 0:
                            c += 1
                    counts[ci * n + x] = <short> c
                    if c == 0:
                        ok = 0
                if not ok:
                    alive[ci] = 0
                    dead[ndead] = ci
                    ndead += 1
            while ndead > 0:
                ndead -= 1
                ci = dead[ndead]
                ymask = keys[ci]
                am = ymask
                while am:
                    v = ctz64(am)
                    am &= am - 1
                    rest = ymask ^ (ONE << v)
                    wm = cadj[v] & ~ymask
                    while wm:
                        w = ctz64(wm)
                        wm &= wm - 1
                        xi = _ht_lookup(keys, table, tmask, rest | (ONE << w))
                        if xi >= 0 and alive[xi]:
                            counts[xi * n + v] -= 1
                            if counts[xi * n + v] == 0:
                                alive[xi] = 0
                                dead[ndead] = xi
                                ndead += 1
        return [configs[ci] for ci in range(m) if alive[ci]]
    finally:
        free(keys)
        free(table)
        free(counts)
        free(alive)
        free(dead)


# ---------------------------------------------------------------------------
# Maximum matching (blossom).
# ---------------------------------------------------------------------------

def max_matching(int n, adj):
    if n == 0:
        return 0
    cdef unsigned long long cadj[CMAXN]
    cdef int match[CMAXN]
    cdef int parent[CMAXN]
    cdef int base[CMAXN]
    cdef int queue[CMAXN]
    cdef char used[CMAXN]
    cdef char flag[CMAXN]
    cdef char seen[CMAXN]
    cdef int i, v, u, root, qh, qt, to, a, b, anchor, child, pv, ppv, size
    cdef int augmented
    cdef unsigned long long m
    for i in range(n):
        cadj[i] = adj[i]
        match[i] = -1
    for v in range(n):
        if match[v] == -1:
            m = cadj[v]
            while m:
                u = ctz64(m)
                m &= m - 1
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    size = 0
    for v in range(n):
        if match[v] != -1:
            size += 1
    size //= 2
    for root in range(n):
        if match[root] != -1:
            continue
        for i in range(n):
            parent[i] = -1
            base[i] = i
            used[i] = 0
        used[root] = 1
        queue[0] = root
        qh = 0
        qt = 1
        augmented = 0
        while qh < qt and not augmented:
            v = queue[qh]
            qh += 1
            m = cadj[v]
            while m:
                to = ctz64(m)
                m &= m - 1
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    for i in range(n):
                        seen[i] = 0
                    a = v
                    while True:
                        a = base[a]
                        seen[a] = 1
                        if match[a] == -1:
                            break
                        a = parent[match[a]]
                    b = to
                    while True:
                        b = base[b]
                        if seen[b]:
                            anchor = b
                            break
                        b = parent[match[b]]
                    for i in range(n):
                        flag[i] = 0
                    a = v
                    child = to
                    while base[a] != anchor:
                        flag[base[a]] = 1
                        flag[base[match[a]]] = 1
                        parent[a] = child
                        child = match[a]
                        a = parent[match[a]]
                    a = to
                    child = v
                    while base[a] != anchor:
                        flag[base[a]] = 1
                        flag[base[match[a]]] = 1
                        parent[a] = child
                        child = match[a]
                        a = parent[match[a]]
                    for i in range(n):
                        if flag[base[i]]:
                            base[i] = anchor
                            if not used[i]:
                                used[i] = 1
                                queue[qt] = i
                                qt += 1
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        size += 1
                        augmented = 1
                        break
                    used[match[to]] = 1
                    queue[qt] = match[to]
                    qt += 1
    return size


# ---------------------------------------------------------------------------
# Canonical augmentation.
# ---------------------------------------------------------------------------

cdef int _key_cmp(unsigned long long *adj, int *degs, int v, int w) noexcept nogil:
    """Compare invariant keys (degree, sorted neighbour degrees)."""
    cdef unsigned char kv[CMAXN + 1]
    cdef unsigned char kw[CMAXN + 1]
    cdef int lv = 0, lw = 0, i, j
    cdef unsigned long long mm
    cdef unsigned char tmp
    if degs[v] != degs[w]:
        return -1 if degs[v] < degs[w] else 1
    mm = adj[v]
    while mm:
        i = ctz64(mm)
        mm &= mm - 1
        kv[lv] = <unsigned char> degs[i]
        lv += 1
    mm = adj[w]
    while mm:
        i = ctz64(mm)
        mm &= mm - 1
        kw[lw] = <unsigned char> degs[i]
        lw += 1
    for i in range(1, lv):
        tmp = kv[i]
        j = i - 1
        while j >= 0 and kv[j] > tmp:
            kv[j + 1] = kv[j]
            j -= 1
        kv[j + 1] = tmp
    for i in range(1, lw):
        tmp = kw[i]
        j = i - 1
        while j >= 0 and kw[j] > tmp:
            kw[j + 1] = kw[j]
            j -= 1
        kw[j + 1] = tmp
    for i in range(lv):
        if kv[i] != kw[i]:
            return -1 if kv[i] < kw[i] else 1
    return 0


cdef int _is_connected_masks(int n, unsigned long long *adj) noexcept nogil:
    cdef unsigned long long seen = 1, frontier = adj[0], nxt, m
    cdef int v
    if n == 0:
        return 0
    while frontier & ~seen:
        seen |= frontier
        nxt = 0
        m = frontier
        while m:
            v = ctz64(m)
            m &= m - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
    return (seen | frontier) == _full_mask(n)


cdef int _is_mtf_masks(int n, unsigned long long *adj) noexcept nogil:
    cdef int u, v
    cdef unsigned long long au, common
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            common = au & adj[v]
            if (au >> v) & 1:
                if common:
                    return 0
            elif common == 0:
                return 0
    return 1


def augment(int n, adj, int mode, emit_connected=False, emit_mtf=False):
    """Isomorph-free children of one parent (see the pure backend docs)."""
    cdef int want_conn = 1 if emit_connected else 0
    cdef int want_mtf = 1 if emit_mtf else 0
    if n >= 22:
        raise BudgetExceeded(f"augmentation over 2^{n} subsets refused", 1 << n)
    cdef unsigned long long padj[CMAXN]
    cdef unsigned long long cadj[CMAXN]
    cdef int parent_degs[CMAXN]
    cdef int degs[CMAXN]
    cdef int i, v, nc = n + 1, dmin, ok, gi, in_s
    cdef unsigned long long s, mm, img
    cdef unsigned long long nbit = ONE << n
    cdef unsigned long long total = ONE << n
    for i in range(n):
        padj[i] = adj[i]
        parent_degs[i] = popcnt64(padj[i])
    cdef CState pst
    _canon_retry(n, padj, &pst)
    cdef int pngens = pst.ngens
    cdef int *pgens = NULL
    if pngens:
        pgens = <int *> malloc(pngens * CMAXN * sizeof(int))
        if pgens == NULL:
            free(pst.gens)
            raise MemoryError()
        memcpy(pgens, pst.gens, pngens * CMAXN * sizeof(int))
    free(pst.gens)

    cdef long long *srep = NULL
    cdef long long aa, bb, root, x, si
    if pngens:
        srep = <long long *> malloc(total * sizeof(long long))
        if srep == NULL:
            free(pgens)
            raise MemoryError()
        for si in range(<long long> total):
            srep[si] = si
        for gi in range(pngens):
            for si in range(<long long> total):
                img = 0
                mm = <unsigned long long> si
                while mm:
                    v = ctz64(mm)
                    mm &= mm - 1
                    img |= ONE << pgens[gi * CMAXN + v]
                aa = si
                while srep[aa] != aa:
                    aa = srep[aa]
                bb = <long long> img
                while srep[bb] != bb:
                    bb = srep[bb]
                if aa != bb:
                    if aa < bb:
                        srep[bb] = aa
                    else:
                        srep[aa] = bb
        for si in range(<long long> total):
            root = si
            while srep[root] != root:
                root = srep[root]
            x = si
            while srep[x] != root:
                aa = srep[x]
                srep[x] = root
                x = aa
    if pgens != NULL:
        free(pgens)

    out = []
    cdef CState cst
    cdef int crep[CMAXN]
    cdef int vstar, vstar_pos, reject
    try:
        for si in range(<long long> total):
            s = <unsigned long long> si
            if mode == MODE_TRIANGLE_FREE:
                ok = 1
                mm = s
                while mm:
                    v = ctz64(mm)
                    mm &= mm - 1
                    if padj[v] & s:
                        ok = 0
                        break
                if not ok:
                    continue
            elif mode == MODE_MAX_DEGREE_3:
                if popcnt64(s) > 3:
                    continue
                ok = 1
                mm = s
                while mm:
                    v = ctz64(mm)
                    mm &= mm - 1
                    if parent_degs[v] >= 3:
                        ok = 0
                        break
                if not ok:
                    continue
            if srep != NULL and srep[si] != si:
                continue
            for i in range(n):
                in_s = 1 if (s >> i) & 1 else 0
                cadj[i] = padj[i] | nbit if in_s else padj[i]
                degs[i] = parent_degs[i] + in_s
            cadj[n] = s
            degs[n] = popcnt64(s)
            dmin = degs[n]
            for i in range(n):
                if degs[i] < dmin:
                    dmin = degs[i]
            if degs[n] != dmin:
                continue
            reject = 0
            for v in range(n):
                if degs[v] == dmin and _key_cmp(cadj, degs, v, n) < 0:
                    reject = 1
                    break
            if reject:
                continue
            if want_conn and not _is_connected_masks(nc, cadj):
                continue
            if want_mtf and not _is_mtf_masks(nc, cadj):
                continue
            _canon_retry(nc, cadj, &cst)
            _orbit_reps_all(&cst, crep)
            vstar = n
            vstar_pos = cst.best_pos[n]
            for v in range(n):
                if degs[v] == dmin and _key_cmp(cadj, degs, v, n) == 0:
                    if cst.best_pos[v] > vstar_pos:
                        vstar_pos = cst.best_pos[v]
                        vstar = v
            if crep[n] == crep[vstar]:
                out.append(tuple(cst.best_cert[i] for i in range(nc)))
            free(cst.gens)
        return out
    finally:
        if srep != NULL:
            free(srep)
