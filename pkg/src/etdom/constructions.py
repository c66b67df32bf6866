"""Graph constructions: circulants, the Mycielski family, bow tie product."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, MAX_VERTICES, TooManyVerticesError, bits, from_edges


@dataclass(frozen=True)
class CirculantSpec:
    """Order n and strictly increasing connection keys in 1..n//2."""

    n: int
    keys: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise GraphError("circulant order must be at least 3")
        if not self.keys:
            raise GraphError("circulant needs at least one key")
        prev = 0
        for k in self.keys:
            if not prev < k <= self.n // 2:
                raise GraphError(
                    f"keys must be strictly increasing in 1..{self.n // 2}: {self.keys}"
                )
            prev = k

    def label(self) -> str:
        return f"C{self.n}[{','.join(str(k) for k in self.keys)}]"


def circulant(spec: CirculantSpec) -> Graph:
    """Vertices 0..n-1; i ~ j exactly when (i-j) mod n is +-key.

    A key of n/2 (even n) pairs each vertex with its antipode once, so
    it contributes degree 1, not 2; the modular test handles that case
    without special treatment.
    """
    n = spec.n
    if n > MAX_VERTICES:
        raise TooManyVerticesError(f"circulant order {n} above {MAX_VERTICES}")
    diffs = set(spec.keys) | {n - k for k in spec.keys}
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (j - i) % n in diffs
    ]
    return from_edges(n, edges)


def mycielskian(g: Graph) -> Graph:
    """Twisted double-plus-apex extension: preserves triangle-freeness
    and raises the chromatic number by one.

    Vertex layout is fixed for reproducible encodings: originals first,
    then one shadow per original wired to its open neighbourhood, then
    the apex adjacent to every shadow.
    """
    n = g.n
    if 2 * n + 1 > MAX_VERTICES:
        raise TooManyVerticesError(f"mycielskian order {2 * n + 1} above {MAX_VERTICES}")
    edges = list(g.edges())
    for v in range(n):
        for w in bits(g.adj[v]):
            edges.append((n + v, w))
    apex = 2 * n
    edges.extend((n + v, apex) for v in range(n))
    return from_edges(2 * n + 1, edges)


def mycielski_family(k: int) -> Graph:
    """Member k of the triangle-free family: K2, then iterated mycielskians.

    Member 3 is the 5-cycle and member 4 the 11-vertex Grotzsch graph;
    orders are 3*2^(k-2) - 1, so k >= 7 exceeds the 64-vertex cap.
    """
    if k < 2:
        raise GraphError("family starts at k=2")
    if 3 * (1 << (k - 2)) - 1 > MAX_VERTICES:
        raise TooManyVerticesError(f"member {k} exceeds {MAX_VERTICES} vertices")
    g = from_edges(2, [(0, 1)])
    for _ in range(k - 2):
        g = mycielskian(g)
    return g


def bowtie(g: Graph, h: Graph) -> Graph:
    """Bow tie product: (i,j) ~ (i',j') iff ii' is an edge of g and
    j = j' or jj' is an edge of h.  Not commutative in general.

    Vertex (i, j) gets index i*|V(h)| + j (row-major).
    """
    if g.n * h.n > MAX_VERTICES:
        raise TooManyVerticesError(f"product order {g.n * h.n} above {MAX_VERTICES}")
    nh = h.n
    edges = []
    for i, ip in g.edges():
        for j in range(nh):
            edges.append((i * nh + j, ip * nh + j))
            for jp in bits(h.adj[j]):
                edges.append((i * nh + j, ip * nh + jp))
    return from_edges(g.n * h.n, edges)


def bowtie_doubling_spec(spec: CirculantSpec) -> CirculantSpec:
    """The circulant isomorphic to (this circulant) bow tie K2.

    The product with an edge replaces every vertex by a non-adjacent
    twin pair, fully joined exactly where the originals were adjacent.
    Indexing the twins n apart turns each key k into the pair of
    differences {k, n+k} modulo 2n, folded into 1..n.
    """
    n2 = 2 * spec.n
    keys = set()
    for k in spec.keys:
        for d in (k, spec.n + k):
            d %= n2
            keys.add(min(d, n2 - d))
    return CirculantSpec(n2, tuple(sorted(keys)))
