"""Pure-Python kernel: the hot combinatorial routines.

Everything here works on (n, adj) with adj a sequence of per-vertex
neighbourhood bitmasks.  The compiled kernel (_fastcore) implements the
same functions with identical semantics; tests cross-check the two.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


class BudgetExceeded(RuntimeError):
    """A configured enumeration cap was hit; carries the observed count."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Canonical labelling: individualization + equitable refinement.
# ---------------------------------------------------------------------------

def _refine(n, adj, cells, queue):
    """Equitable refinement of an ordered partition (cells = masks)."""
    cells = list(cells)
    queue = list(queue)
    qi = 0
    while qi < len(queue):
        splitter = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell.bit_count() > 1:
                groups = {}
                for v in _bits(cell):
                    d = (adj[v] & splitter).bit_count()
                    groups[d] = groups.get(d, 0) | (1 << v)
                if len(groups) > 1:
                    frags = [groups[d] for d in sorted(groups)]
                    cells[i:i + 1] = frags
                    queue.extend(frags)
                    i += len(frags) - 1
            i += 1
    return cells


def _cert_from_pos(n, adj, pos):
    cert = [0] * n
    for v in range(n):
        row = 0
        av = adj[v]
        while av:
            low = av & -av
            row |= 1 << pos[low.bit_length() - 1]
            av ^= low
        cert[pos[v]] = row
    return tuple(cert)


def _orbit_reps(n, gens, fixed=()):
    """Union-find orbit representatives under generators fixing `fixed`."""
    rep = list(range(n))

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    rep[b] = a
                else:
                    rep[a] = b
    return [find(v) for v in range(n)]


def canon(n, adj):
    """Canonical labelling with full automorphism generators.

    Returns (cert, pos, orbit, gens):
      cert  -- adjacency rows of the canonically relabelled graph,
               the lexicographic minimum over the search tree leaves
      pos   -- pos[v] = canonical position of input vertex v
      orbit -- orbit[v] = least vertex in v's automorphism orbit
      gens  -- permutation generators of the automorphism group
    """
    if n == 0:
        return (), [], [], []
    full = (1 << n) - 1
    root = _refine(n, adj, [full], [full])

    NO_UNWIND = n + 1
    best = {"cert": None, "pos": None}
    first = {"cert": None, "pos": None, "seq": None}
    gens = []

    def handle_leaf(cells, fixed):
        """Returns an unwind depth, or NO_UNWIND.

        When a leaf matches the first leaf's certificate, the derived
        automorphism maps this branch onto the first-path branch at
        their first divergence, so the search can retreat there
        (verified explicitly before use, never assumed).
        """
        unwind = NO_UNWIND
        pos = [0] * n
        for p, cell in enumerate(cells):
            pos[cell.bit_length() - 1] = p
        cert = _cert_from_pos(n, adj, pos)
        if first["cert"] is None:
            first["cert"] = cert
            first["pos"] = pos
            first["seq"] = list(fixed)
        elif cert == first["cert"]:
            inv_first = [0] * n
            for v in range(n):
                inv_first[first["pos"][v]] = v
            perm = [inv_first[pos[v]] for v in range(n)]
            if any(perm[v] != v for v in range(n)):
                gens.append(perm)
                seq = first["seq"]
                if len(fixed) == len(seq):
                    d = next(
                        (i for i in range(len(fixed)) if fixed[i] != seq[i]), -1
                    )
                    if (
                        d >= 0
                        and perm[fixed[d]] == seq[d]
                        and all(perm[fixed[i]] == fixed[i] for i in range(d))
                    ):
                        unwind = d
        if best["cert"] is None or cert < best["cert"]:
            best["cert"] = cert
            best["pos"] = pos
        return unwind

    def search(cells, fixed):
        depth = len(fixed)
        target = -1
        target_size = n + 1
        for i, cell in enumerate(cells):
            size = cell.bit_count()
            if 1 < size < target_size:
                target_size = size
                target = i
        if target < 0:
            return handle_leaf(cells, fixed)
        cell = cells[target]
        tried = []
        for u in _bits(cell):
            if tried:
                reps = _orbit_reps(n, gens, fixed)
                if any(reps[u] == reps[w] for w in tried):
                    tried.append(u)
                    continue
            split = [1 << u, cell ^ (1 << u)]
            refined = _refine(
                n, adj, cells[:target] + split + cells[target + 1:], split
            )
            r = search(refined, fixed + [u])
            tried.append(u)
            if r < depth:
                return r
        return NO_UNWIND

    search(root, [])
    orbit = _orbit_reps(n, gens)
    return best["cert"], best["pos"], orbit, gens


# ---------------------------------------------------------------------------
# Cliques: maximum clique, maximal clique enumeration, clique cover.
# ---------------------------------------------------------------------------

def max_clique(n, adj, lb=0):
    """Exact clique number via greedy-colouring branch and bound."""
    if n == 0:
        return 0
    best = lb

    def expand(size, pool):
        nonlocal best
        order = []
        bounds = []
        colour = 0
        remaining = pool
        while remaining:
            colour += 1
            avail = remaining
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append(v)
                bounds.append(colour)
                avail &= ~adj[v] & ~(1 << v)
                remaining &= ~(1 << v)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            nxt = pool & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            pool &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def maximal_cliques(n, adj):
    """All maximal cliques as masks (Bron-Kerbosch, max-degree pivot)."""
    out = []
    if n == 0:
        return out

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = -1
        pivot_cnt = -1
        m = px
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            c = (p & adj[u]).bit_count()
            if c > pivot_cnt:
                pivot_cnt = c
                pivot = u
        cand = p & ~adj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bk(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << n) - 1, 0)
    return out


def _greedy_independent(n, adj, mask):
    cnt = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        cnt += 1
        mask &= ~adj[v] & ~(1 << v)
    return cnt


def clique_cover(n, adj, lb=0):
    """Exact clique cover number: branch and bound over maximal cliques.

    Any minimum cover can be rewritten with maximal cliques (absorb each
    part into a maximal superset, then trim overlaps), so restricting
    the search space is safe.
    """
    if n == 0:
        return 0
    full = (1 << n) - 1
    cliques = maximal_cliques(n, adj)
    member = [[] for _ in range(n)]
    for ci, c in enumerate(cliques):
        for v in _bits(c):
            member[v].append(ci)

    covered = 0
    ub = 0
    while covered != full:
        bestc = max(cliques, key=lambda c: (c & ~covered).bit_count())
        covered |= bestc
        ub += 1
    best = ub
    lb = max(lb, _greedy_independent(n, adj, full))
    if best <= lb:
        return best

    def search(covered, used):
        nonlocal best
        if covered == full:
            if used < best:
                best = used
            return
        rem = full & ~covered
        if used + _greedy_independent(n, adj, rem) >= best:
            return
        branch_v = -1
        branch_opts = n * n
        m = rem
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if len(member[v]) < branch_opts:
                branch_opts = len(member[v])
                branch_v = v
        for ci in member[branch_v]:
            search(covered | cliques[ci], used + 1)
            if best <= lb:
                return

    search(0, 0)
    return best


# ---------------------------------------------------------------------------
# Dominating sets and the eternal-domination fixpoint.
# ---------------------------------------------------------------------------

def dominating_sets(n, adj, k, cap=1 << 26):
    """All k-vertex dominating sets as sorted masks; BudgetExceeded past cap."""
    full = (1 << n) - 1
    if n == 0:
        return []
    closed = [adj[i] | (1 << i) for i in range(n)]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]
    out = []
    count = 0

    def rec(i, left, cov, cur):
        nonlocal count
        if cov | suffix[i] != full:
            return
        if left == 0:
            if cov == full:
                count += 1
                if count <= cap:
                    out.append(cur)
            return
        if n - i < left:
            return
        rec(i + 1, left - 1, cov | closed[i], cur | (1 << i))
        rec(i + 1, left, cov, cur)

    rec(0, k, 0, 0)
    if count > cap:
        raise BudgetExceeded(
            f"{count} dominating {k}-sets exceed the configured cap {cap}", count
        )
    out.sort()
    return out


def count_dominating_sets(n, adj, k):
    full = (1 << n) - 1
    closed = [adj[i] | (1 << i) for i in range(n)]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]
    count = 0

    def rec(i, left, cov):
        nonlocal count
        if cov | suffix[i] != full:
            return
        if left == 0:
            if cov == full:
                count += 1
            return
        if n - i < left:
            return
        rec(i + 1, left - 1, cov | closed[i])
        rec(i + 1, left, cov)

    rec(0, k, 0)
    return count


def exists_dominating_set(n, adj, k):
    full = (1 << n) - 1
    if n == 0:
        return True
    closed = [adj[i] | (1 << i) for i in range(n)]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]

    def rec(i, left, cov):
        if cov == full:
            return True
        if left == 0 or cov | suffix[i] != full or n - i < left:
            return False
        if rec(i + 1, left - 1, cov | closed[i]):
            return True
        return rec(i + 1, left, cov)

    return rec(0, k, 0)


def domination_number(n, adj):
    if n == 0:
        return 0
    max_closed = max((adj[i] | (1 << i)).bit_count() for i in range(n))
    k = (n + max_closed - 1) // max_closed
    while not exists_dominating_set(n, adj, k):
        k += 1
    return k


def eternal_fixpoint(n, adj, k, configs):
    """Surviving subset of the k-guard configuration digraph.

    configs must be the sorted dominating k-set masks.  A configuration
    X survives when, for every unguarded vertex x, some guard w on a
    neighbour of x can move to x with the successor configuration also
    surviving.  Deletions propagate through a worklist over reverse
    dependencies.
    """
    if not configs:
        return []
    if k >= n:
        return list(configs)
    full = (1 << n) - 1
    index = {m: i for i, m in enumerate(configs)}
    counts = []
    alive = [True] * len(configs)
    dead = []
    for i, x_mask in enumerate(configs):
        row = [0] * n
        ok = True
        attacks = full & ~x_mask
        for x in _bits(attacks):
            c = 0
            for w in _bits(adj[x] & x_mask):
                if (x_mask ^ (1 << w)) | (1 << x) in index:
                    c += 1
            row[x] = c
            if c == 0:
                ok = False
        counts.append(row)
        if not ok:
            alive[i] = False
            dead.append(i)
    while dead:
        yi = dead.pop()
        y_mask = configs[yi]
        for v in _bits(y_mask):
            rest = y_mask ^ (1 << v)
            for w in _bits(adj[v] & ~y_mask):
                xi = index.get(rest | (1 << w))
                if xi is not None and alive[xi]:
                    row = counts[xi]
                    row[v] -= 1
                    if row[v] == 0:
                        alive[xi] = False
                        dead.append(xi)
    return [m for i, m in enumerate(configs) if alive[i]]


# ---------------------------------------------------------------------------
# Maximum matching (blossom algorithm, unweighted).
# ---------------------------------------------------------------------------

def max_matching(n, adj):
    """Size of a maximum matching; exact on non-bipartite graphs."""
    if n == 0:
        return 0
    nbr = [list(_bits(adj[v])) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in nbr[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    parent = [-1] * n
    base = list(range(n))

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, anchor, child, flag):
        while base[v] != anchor:
            flag[base[v]] = True
            flag[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root):
        for v in range(n):
            parent[v] = -1
            base[v] = v
        used = [False] * n
        used[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in nbr[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom
                    anchor = lca(v, to)
                    flag = [False] * n
                    mark_path(v, anchor, to, flag)
                    mark_path(to, anchor, v, flag)
                    for u in range(n):
                        if flag[base[u]]:
                            base[u] = anchor
                            if not used[u]:
                                used[u] = True
                                queue.append(u)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path back to root
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    size = sum(1 for v in range(n) if match[v] != -1) // 2
    for v in range(n):
        if match[v] == -1 and find_path(v):
            size += 1
    return size


# ---------------------------------------------------------------------------
# Canonical augmentation: one generation layer step.
# ---------------------------------------------------------------------------

MODE_ALL = 0
MODE_TRIANGLE_FREE = 1
MODE_MAX_DEGREE_3 = 2


def _vertex_key(n, adj, degs, v):
    return (degs[v], sorted(degs[w] for w in _bits(adj[v])))


def _subset_orbit_reps(n, gens):
    """rep[s] = least mask in the orbit of s under <gens>, for all 2^n masks."""
    size = 1 << n
    rep = list(range(size))

    def find(x):
        root = x
        while rep[root] != root:
            root = rep[root]
        while rep[x] != root:
            rep[x], x = root, rep[x]
        return root

    for g in gens:
        image_of_bit = [1 << g[v] for v in range(n)]
        for s in range(size):
            img = 0
            m = s
            while m:
                low = m & -m
                img |= image_of_bit[low.bit_length() - 1]
                m ^= low
            a, b = find(s), find(img)
            if a != b:
                if a < b:
                    rep[b] = a
                else:
                    rep[a] = b
    return [find(s) for s in range(size)]


def _is_connected_masks(n, adj):
    if n == 0:
        return False
    seen = 1
    frontier = adj[0]
    while frontier & ~seen:
        seen |= frontier
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            nxt |= adj[v]
            m &= m - 1
        frontier = nxt & ~seen
    return (seen | frontier) == (1 << n) - 1


def _is_mtf_masks(n, adj):
    """Triangle-free with every non-adjacent pair sharing a neighbour."""
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            common = au & adj[v]
            if au >> v & 1:
                if common:
                    return False
            elif not common:
                return False
    return True


def augment(n, adj, mode, emit_connected=False, emit_mtf=False):
    """Isomorph-free children of one parent: add vertex n joined to a subset.

    Accepts a child exactly when the new vertex lies in the orbit of the
    canonical deletion vertex (least invariant key, latest canonical
    position), so each unlabelled child of order n+1 is produced from
    exactly one (parent, subset-orbit) pair.  Returns canonical
    adjacency tuples in deterministic order; the emit flags drop
    children failing the final-layer predicates without a Python
    round trip.
    """
    if n >= 22:
        raise BudgetExceeded(f"augmentation over 2^{n} subsets refused", 1 << n)
    adj = list(adj)
    _, _, _, gens = canon(n, adj)
    reps = _subset_orbit_reps(n, gens) if gens else None
    out = []
    parent_degs = [adj[v].bit_count() for v in range(n)]
    nc = n + 1
    for s in range(1 << n):
        if mode == MODE_TRIANGLE_FREE:
            ok = True
            m = s
            while m:
                v = (m & -m).bit_length() - 1
                if adj[v] & s:
                    ok = False
                    break
                m &= m - 1
            if not ok:
                continue
        elif mode == MODE_MAX_DEGREE_3:
            if s.bit_count() > 3:
                continue
            ok = True
            m = s
            while m:
                v = (m & -m).bit_length() - 1
                if parent_degs[v] >= 3:
                    ok = False
                    break
                m &= m - 1
            if not ok:
                continue
        if reps is not None and reps[s] != s:
            continue
        cadj = [adj[v] | (1 << n) if s >> v & 1 else adj[v] for v in range(n)]
        cadj.append(s)
        degs = [cadj[v].bit_count() for v in range(nc)]
        dmin = min(degs)
        if degs[n] != dmin:
            continue
        key_new = _vertex_key(nc, cadj, degs, n)
        reject = False
        for v in range(n):
            if degs[v] == dmin and _vertex_key(nc, cadj, degs, v) < key_new:
                reject = True
                break
        if reject:
            continue
        if emit_connected and not _is_connected_masks(nc, cadj):
            continue
        if emit_mtf and not _is_mtf_masks(nc, cadj):
            continue
        cert, pos, orbit, _ = canon(nc, cadj)
        vstar = -1
        vstar_pos = -1
        for v in range(nc):
            if degs[v] == dmin and _vertex_key(nc, cadj, degs, v) == key_new:
                if pos[v] > vstar_pos:
                    vstar_pos = pos[v]
                    vstar = v
        if orbit[n] == orbit[vstar]:
            out.append(cert)
    return out
