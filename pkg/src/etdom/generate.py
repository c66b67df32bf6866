"""Isomorph-free exhaustive generation of small graphs.

General and triangle-free graphs grow one vertex per layer by canonical
augmentation: a child is kept exactly when its new vertex sits in the
orbit of the canonical deletion vertex, so no seen-set is needed and
layers can be sharded across workers.  Connectivity is filtered at
emission; the layer itself keeps disconnected graphs because deleting
the canonical vertex of a connected graph may disconnect it.

Cubic graphs use a different ladder: subdivide two distinct edges of a
(possibly disconnected) cubic graph two orders down and join the new
vertices, plus disjoint unions for the disconnected part, deduplicated
by canonical form.  The known connected counts (1, 2, 5, 19, 85, 509,
4060 for n = 4..16) pin the method's completeness in the test suite.
"""

from __future__ import annotations

import itertools
import os
import tempfile
from multiprocessing import Pool
from typing import Iterator

from . import _kernel
from .canon import canonical_form
from .constructions import CirculantSpec, circulant
from .graph6 import decode, encode
from .graphs import Graph, GraphError, is_connected, is_cubic

CONSTRAINTS = ("all", "triangle_free", "maximal_triangle_free", "cubic")

# (default ceiling, ceiling with allow_large) per constraint
BUDGETS = {
    "all": (9, 10),
    "triangle_free": (13, 15),
    "maximal_triangle_free": (13, 15),
    "cubic": (14, 16),
}

_MODE = {
    "all": _kernel.MODE_ALL,
    "triangle_free": _kernel.MODE_TRIANGLE_FREE,
    "maximal_triangle_free": _kernel.MODE_TRIANGLE_FREE,
    "max_degree_3": _kernel.MODE_MAX_DEGREE_3,
}


class GenerationBudgetError(GraphError):
    """Requested order beyond the documented generation budget."""


def _check_budget(n: int, constraint: str, allow_large: bool) -> None:
    if constraint not in BUDGETS:
        raise GraphError(f"unknown constraint {constraint!r}")
    default_cap, large_cap = BUDGETS[constraint]
    cap = large_cap if allow_large else default_cap
    if n > cap:
        hint = "" if allow_large else "; pass allow_large / --large to extend"
        raise GenerationBudgetError(
            f"{constraint} generation supports n <= {cap}, got {n}{hint}"
        )


# layers beyond this many lines spill to a temp file instead of RAM
SPILL_LINES = 8_000_000


class Layer:
    """One generation layer: graph6 lines held in memory or on disk."""

    def __init__(self, lines: list[str] | None = None, path: str | None = None,
                 count: int = 0):
        self.lines = lines
        self.path = path
        self.count = len(lines) if lines is not None else count

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[str]:
        if self.lines is not None:
            yield from self.lines
        else:
            with open(self.path, "r", encoding="ascii") as fh:
                for raw in fh:
                    yield raw.rstrip("\n")

    def batches(self, size: int) -> Iterator[list[str]]:
        batch = []
        for line in self:
            batch.append(line)
            if len(batch) >= size:
                yield batch
                batch = []
        if batch:
            yield batch

    def discard(self) -> None:
        if self.path is not None:
            try:
                os.unlink(self.path)
            except OSError:
                pass
            self.path = None
            self.lines = []

    def __del__(self):
        self.discard()


def _augment_batch(args: tuple[list[str], int, bool, bool]) -> list[str]:
    parents, mode, emit_connected, emit_mtf = args
    out = []
    for line in parents:
        g = decode(line)
        for cert in _kernel.augment(
            g.n, list(g.adj), mode,
            emit_connected=emit_connected, emit_mtf=emit_mtf,
        ):
            out.append(encode(Graph(g.n + 1, tuple(cert))))
    return out


class _LayerWriter:
    """Accumulates child lines, spilling to disk past the threshold."""

    def __init__(self):
        self.lines: list[str] | None = []
        self.fh = None
        self.path = None
        self.count = 0

    def extend(self, lines: list[str]) -> None:
        self.count += len(lines)
        if self.lines is not None:
            self.lines.extend(lines)
            if len(self.lines) > SPILL_LINES:
                fd, self.path = tempfile.mkstemp(suffix=".g6", prefix="etdom-layer-")
                self.fh = os.fdopen(fd, "w", encoding="ascii")
                self.fh.write("\n".join(self.lines))
                if self.lines:
                    self.fh.write("\n")
                self.lines = None
        else:
            self.fh.write("\n".join(lines))
            if lines:
                self.fh.write("\n")

    def finish(self) -> Layer:
        if self.lines is not None:
            return Layer(lines=self.lines)
        self.fh.close()
        return Layer(path=self.path, count=self.count)


def _extend_layer(
    layer: Layer, mode: int, workers: int,
    emit_connected: bool = False, emit_mtf: bool = False,
) -> Layer:
    writer = _LayerWriter()
    if workers > 1 and len(layer) >= 4 * workers:
        chunk = min(4096, max(1, (len(layer) + 8 * workers - 1) // (8 * workers)))
        batches = (
            (batch, mode, emit_connected, emit_mtf)
            for batch in layer.batches(chunk)
        )
        with Pool(workers) as pool:
            for result in pool.imap(_augment_batch, batches):
                writer.extend(result)
    else:
        for batch in layer.batches(65536):
            writer.extend(_augment_batch((batch, mode, emit_connected, emit_mtf)))
    return writer.finish()


def graph_layers(max_n: int, mode_name: str, *, workers: int = 1) -> Iterator[Layer]:
    """Yield, for n = 1..max_n, all graphs of order n under the hereditary
    constraint (connected or not) as canonical graph6 lines (a Layer is
    iterable and sized; huge layers live in temp files)."""
    mode = _MODE[mode_name]
    layer = Layer(lines=[encode(Graph(1, (0,)))])
    yield layer
    for _ in range(1, max_n):
        parent = layer
        layer = _extend_layer(parent, mode, workers)
        parent.discard()
        yield layer


def generate_connected(
    n: int, constraint: str = "all", *, allow_large: bool = False, workers: int = 1
) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs of
    order n meeting the constraint, in deterministic (canonical) order.

    The last layer filters inside the kernel, so large final layers
    never materialise graphs that the constraint is about to drop.
    """
    _check_budget(n, constraint, allow_large)
    if constraint == "cubic":
        yield from _generate_cubic_connected(n)
        return
    if n < 1:
        return
    if n == 1:
        yield Graph(1, (0,))
        return
    mode_name = constraint if constraint != "maximal_triangle_free" else "triangle_free"
    layer = None
    for layer in graph_layers(n - 1, mode_name, workers=workers):
        pass
    final = _extend_layer(
        layer, _MODE[mode_name], workers,
        emit_connected=True, emit_mtf=constraint == "maximal_triangle_free",
    )
    layer.discard()
    lines = sorted(final)
    final.discard()
    for line in lines:
        yield decode(line)


# -- cubic ladder -----------------------------------------------------------


def _edge_list(g: Graph) -> list[tuple[int, int]]:
    return list(g.edges())


def _insert_on_edges(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Graph:
    a, b = e1
    c, d = e2
    n = g.n
    u, v = n, n + 1
    adj = [row for row in g.adj]
    adj.append(0)
    adj.append(0)

    def _del(x, y):
        adj[x] &= ~(1 << y)
        adj[y] &= ~(1 << x)

    def _add(x, y):
        adj[x] |= 1 << y
        adj[y] |= 1 << x

    _del(a, b)
    _del(c, d)
    _add(a, u)
    _add(u, b)
    _add(c, v)
    _add(v, d)
    _add(u, v)
    return Graph(n + 2, tuple(adj))


def _insert_diamond(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge pq by p-u ... w-q with a K4-minus-an-edge between
    u and w (reaches the diamond necklaces the two-edge insertion cannot)."""
    p, q = e
    n = g.n
    u, w, x, y = n, n + 1, n + 2, n + 3
    adj = list(g.adj) + [0, 0, 0, 0]
    adj[p] &= ~(1 << q)
    adj[q] &= ~(1 << p)
    for a, b in ((p, u), (w, q), (u, x), (u, y), (w, x), (w, y), (x, y)):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(n + 4, tuple(adj))


def _cubic_all(n: int, cache: dict) -> dict[bytes, Graph]:
    """All cubic graphs of order n, connected or not, keyed by canonical form.

    Children come from two local expansions (two-edge subdivision+join
    from order n-2, diamond insertion from order n-4) plus disjoint
    unions.  Outputs are individually validated and count-checked
    against the known connected-cubic sequence, which makes the ladder's
    completeness a tested fact rather than an assumption.
    """
    if n in cache:
        return cache[n]
    if n < 4 or n % 2:
        cache[n] = {}
        return cache[n]
    if n == 4:
        from .graphs import complete_graph

        k4 = complete_graph(4)
        cache[4] = {canonical_form(k4): k4}
        return cache[4]
    found: dict[bytes, Graph] = {}
    for parent in _cubic_all(n - 2, cache).values():
        edges = _edge_list(parent)
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                child = _insert_on_edges(parent, edges[i], edges[j])
                key = canonical_form(child)
                if key not in found:
                    found[key] = child
    for parent in _cubic_all(n - 4, cache).values():
        for e in _edge_list(parent):
            child = _insert_diamond(parent, e)
            key = canonical_form(child)
            if key not in found:
                found[key] = child
    # disconnected cubic graphs: a connected component plus any smaller rest
    from .graphs import disjoint_union

    for k in range(4, n - 3, 2):
        rest = _cubic_all(n - k, cache)
        for comp in _cubic_all(k, cache).values():
            if not is_connected(comp):
                continue
            for other in rest.values():
                child = disjoint_union(comp, other)
                key = canonical_form(child)
                if key not in found:
                    found[key] = child
    cache[n] = found
    return found


def _generate_cubic_connected(n: int) -> Iterator[Graph]:
    if n < 4 or n % 2:
        return
    cache: dict = {}
    found = _cubic_all(n, cache)
    for key in sorted(found):
        g = found[key]
        if is_connected(g):
            assert is_cubic(g)
            yield g


# -- circulants -------------------------------------------------------------


def enumerate_circulants(n: int) -> list[CirculantSpec]:
    """Connected circulants of order n, one spec per isomorphism class.

    Key sets are scanned in lexicographic order and deduplicated by
    canonical form, so the representative kept for each class is the
    lexicographically least key set describing it.
    """
    if n < 3:
        raise GraphError("circulant order must be at least 3")
    half = n // 2
    specs = []
    seen: set[bytes] = set()
    all_keys = sorted(
        itertools.chain.from_iterable(
            itertools.combinations(range(1, half + 1), r) for r in range(1, half + 1)
        )
    )
    for keys in all_keys:
        spec = CirculantSpec(n, keys)
        g = circulant(spec)
        if not is_connected(g):
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            specs.append(spec)
    return specs


def connected_count(n: int, constraint: str = "all", **kwargs) -> int:
    return sum(1 for _ in generate_connected(n, constraint, **kwargs))
