"""Graph ingestion, cleanup and shortest-path distance matrices.

Input graphs come from Matrix Market files (the sparse-matrix benchmark
format), plain edge lists, or the synthetic generators below.  Everything
is normalized to a simple undirected graph on vertices [0, n): self-loops
dropped, duplicate/reversed edges merged.  Distances are unweighted hop
counts computed by one BFS per source vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


class GraphFormatError(ValueError):
    """Malformed graph input; the message carries the offending line number."""


class DisconnectedGraphError(ValueError):
    """An operation that needs finite distances was given a disconnected graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with contiguous 0-based vertex ids.

    ``edges`` holds each edge once as a sorted ``(i, j)`` pair with i < j,
    in sorted order; ``adjacency`` is the derived per-vertex sorted
    neighbor tuple.  Instances are immutable and safe to share.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Normalize an edge iterable: drop self-loops, merge duplicates."""
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        cleaned = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                continue
            cleaned.add((i, j) if i < j else (j, i))
        edge_tuple = tuple(sorted(cleaned))
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for i, j in edge_tuple:
            neighbors[i].append(j)
            neighbors[j].append(i)
        adjacency = tuple(tuple(sorted(a)) for a in neighbors)
        return cls(n=n, edges=edge_tuple, adjacency=adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])


class DistanceMatrix:
    """Symmetric matrix of pairwise target distances, zero on the diagonal.

    Also exposes the stress weights w(i,j) = d(i,j)**-2 used throughout.
    The underlying array is read-only; instances are immutable.
    """

    def __init__(self, matrix):
        d = np.array(matrix, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError(f"distance matrix must be square, got shape {d.shape}")
        if d.shape[0] < 1:
            raise ValueError("distance matrix must have at least one row")
        if not np.isfinite(d).all():
            raise ValueError("distance matrix contains non-finite entries")
        if (d < 0).any():
            raise ValueError("distances must be nonnegative")
        if np.diagonal(d).any():
            raise ValueError("distance matrix diagonal must be zero")
        if not np.array_equal(d, d.T):
            raise ValueError("distance matrix must be symmetric")
        d.setflags(write=False)
        self._d = d

    @property
    def n(self) -> int:
        return self._d.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._d

    def weight(self, i: int, j: int) -> float:
        if i == j:
            raise ValueError("weight is defined for i != j only")
        dij = self._d[i, j]
        if dij == 0.0:
            raise ValueError(f"zero distance between distinct vertices {i}, {j}")
        return float(dij**-2.0)

    @cached_property
    def weights(self) -> np.ndarray:
        """Full weight matrix d**-2 with zero diagonal (read-only)."""
        off = ~np.eye(self.n, dtype=bool)
        if (self._d[off] == 0.0).any():
            raise ValueError("zero distance between distinct vertices")
        w = np.zeros_like(self._d)
        w[off] = self._d[off] ** -2.0
        w.setflags(write=False)
        return w

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def parse_matrix_market(source) -> Graph:
    """Parse a Matrix Market coordinate file into a Graph.

    Accepts a string or a file-like object.  The nonzero pattern of the
    (square) matrix is symmetrized; numeric values, if present, are
    ignored.  Self-loops are dropped.  pattern/real/integer fields and
    general/symmetric banners are supported.
    """
    text = source.read() if hasattr(source, "read") else source
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphFormatError("line 1: missing Matrix Market banner")
    banner = lines[0].split()
    if len(banner) != 5 or banner[0].lower() != "%%matrixmarket":
        raise GraphFormatError("line 1: malformed Matrix Market banner")
    obj, layout, field, symmetry = (tok.lower() for tok in banner[1:])
    if obj != "matrix":
        raise GraphFormatError(f"line 1: unsupported object {obj!r}")
    if layout != "coordinate":
        raise GraphFormatError(f"line 1: only coordinate format is supported, got {layout!r}")
    if field not in ("pattern", "real", "integer"):
        raise GraphFormatError(f"line 1: unsupported field {field!r}")
    if symmetry not in ("general", "symmetric"):
        raise GraphFormatError(f"line 1: unsupported symmetry {symmetry!r}")

    size: int | None = None
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        if size is None:
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected size line 'rows cols nnz'")
            try:
                rows, cols, _ = (int(t) for t in tokens)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer size entry") from None
            if rows != cols:
                raise GraphFormatError(f"line {lineno}: matrix is {rows}x{cols}, expected square")
            if rows < 0:
                raise GraphFormatError(f"line {lineno}: negative dimension")
            size = rows
            continue
        if len(tokens) < 2:
            raise GraphFormatError(f"line {lineno}: expected two indices")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer index") from None
        if not (1 <= i <= size and 1 <= j <= size):
            raise GraphFormatError(f"line {lineno}: index out of declared range 1..{size}")
        entries.append((i - 1, j - 1))
    if size is None:
        raise GraphFormatError("missing size line")
    return Graph.from_edges(size, entries)


def parse_edge_list(source) -> Graph:
    """Parse whitespace-separated vertex-id pairs, one edge per line.

    Lines starting with '#' and blank lines are skipped.  Vertex ids are
    arbitrary nonnegative integers, remapped to [0, n) in first-seen order.
    """
    text = source.read() if hasattr(source, "read") else source
    ids: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids, got {len(tokens)} tokens")
        pair = []
        for tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer vertex id {tok!r}") from None
            if v < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex id {v}")
            if v not in ids:
                ids[v] = len(ids)
            pair.append(ids[v])
        pairs.append((pair[0], pair[1]))
    return Graph.from_edges(len(ids), pairs)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, in order of smallest member."""
    seen = [False] * g.n
    components: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        component = [start]
        seen[start] = True
        head = 0
        while head < len(component):
            v = component[head]
            head += 1
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    component.append(u)
        component.sort()
        components.append(component)
    return components


def largest_connected_component(g: Graph) -> Graph:
    """Induced subgraph on the largest component, reindexed to [0, n').

    Ties between equal-sized components go to the one containing the
    smallest original vertex id.  Reindexing preserves ascending id order.
    """
    if g.n == 0:
        return g
    best: list[int] = []
    for component in connected_components(g):
        if len(component) > len(best):  # first wins ties: smallest min id
            best = component
    remap = {v: k for k, v in enumerate(best)}
    kept = set(best)
    edges = [(remap[i], remap[j]) for i, j in g.edges if i in kept and j in kept]
    return Graph.from_edges(len(best), edges)


def bfs_hops(g: Graph, source: int) -> list[int]:
    """Hop counts from source to every vertex; -1 marks unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dv = dist[v]
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def all_pairs_shortest_paths(g: Graph) -> DistanceMatrix:
    """Hop-count distance matrix via one BFS per vertex.

    Raises DisconnectedGraphError on the first unreachable pair; callers
    should reduce to a connected component first.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    d = np.zeros((g.n, g.n))
    for s in range(g.n):
        hops = bfs_hops(g, s)
        if -1 in hops:
            raise DisconnectedGraphError(
                f"vertex {hops.index(-1)} unreachable from vertex {s}"
            )
        d[s] = hops
    return DistanceMatrix(d)


def path_graph(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols lattice with 4-neighborhood."""
    _check_size(rows)
    _check_size(cols)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def complete_graph(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def generate(family: str, *sizes: int) -> Graph:
    """Dispatch to a synthetic family: path, cycle, grid (rows, cols), complete."""
    makers = {
        "path": (path_graph, 1),
        "cycle": (cycle_graph, 1),
        "grid": (grid_graph, 2),
        "complete": (complete_graph, 1),
    }
    if family not in makers:
        raise ValueError(f"unknown graph family {family!r}; expected one of {sorted(makers)}")
    maker, arity = makers[family]
    if len(sizes) != arity:
        raise ValueError(f"{family} takes {arity} size parameter(s), got {len(sizes)}")
    return maker(*sizes)


def _check_size(value: int) -> None:
    if value < 1:
        raise ValueError(f"size parameters must be positive, got {value}")
