"""Shared test utilities: independent oracles and instance generators.

Every oracle here deliberately avoids the code paths it is used to check:
Floyd-Warshall vs per-source BFS, dense eigendecomposition vs power
iteration, finite differences vs the analytic gradient, rotation grid
search vs the closed-form similarity fit.
"""

from __future__ import annotations

import math

import numpy as np

from stresslayout import DistanceMatrix, Graph, stress


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random tree on n vertices plus extra random edges; always connected."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(n).tolist()
    edges = set()
    for k in range(1, n):
        a, b = order[int(rng.integers(0, k))], order[k]
        edges.add((min(a, b), max(a, b)))
    for _ in range(extra_edges):
        a, b = (int(v) for v in rng.integers(0, n, 2))
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


def floyd_warshall(g: Graph) -> np.ndarray:
    """Brute-force all-pairs hop distances; inf where unreachable."""
    big = math.inf
    d = [[0.0 if i == j else big for j in range(g.n)] for i in range(g.n)]
    for i, j in g.edges:
        d[i][j] = d[j][i] = 1.0
    for k in range(g.n):
        dk = d[k]
        for i in range(g.n):
            dik = d[i][k]
            if dik == big:
                continue
            di = d[i]
            for j in range(g.n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return np.array(d)


def finite_difference_gradient(coords, dist: DistanceMatrix, h: float = 1e-6) -> np.ndarray:
    """Central finite differences of the stress objective."""
    x = np.array(coords, dtype=float)
    grad = np.zeros_like(x)
    for i in range(x.shape[0]):
        for axis in range(2):
            forward = x.copy()
            backward = x.copy()
            forward[i, axis] += h
            backward[i, axis] -= h
            grad[i, axis] = (stress(forward, dist) - stress(backward, dist)) / (2.0 * h)
    return grad


def cmds_eigh_oracle(dist: DistanceMatrix) -> np.ndarray:
    """Classical scaling via dense symmetric eigendecomposition."""
    d2 = dist.matrix**2
    n = dist.n
    j = np.eye(n) - np.ones((n, n)) / n
    b = -0.5 * j @ d2 @ j
    eigenvalues, eigenvectors = np.linalg.eigh(b)
    top = np.argsort(eigenvalues)[::-1][:2]
    columns = [
        eigenvectors[:, idx] * math.sqrt(max(float(eigenvalues[idx]), 0.0)) for idx in top
    ]
    return np.column_stack(columns)


def top_eigenvalues(dist: DistanceMatrix, count: int = 4) -> np.ndarray:
    """Largest eigenvalues of the double-centered squared-distance matrix."""
    d2 = dist.matrix**2
    n = dist.n
    j = np.eye(n) - np.ones((n, n)) / n
    b = -0.5 * j @ d2 @ j
    return np.sort(np.linalg.eigvalsh(b))[::-1][:count]


def procrustes_grid_oracle(a, b, angles: int = 4000) -> float:
    """Best RMS over discretized rotations/reflections with optimal scale."""
    xa = np.asarray(a, dtype=float)
    xb = np.asarray(b, dtype=float)
    ac = xa - xa.mean(axis=0)
    bc = xb - xb.mean(axis=0)
    best = math.inf
    for reflect in (1.0, -1.0):
        flipped = bc.copy()
        flipped[:, 1] *= reflect
        for theta in np.linspace(0.0, 2.0 * math.pi, angles, endpoint=False):
            c, s = math.cos(theta), math.sin(theta)
            rotated = flipped @ np.array([[c, s], [-s, c]])
            scale = float((rotated * ac).sum() / (rotated**2).sum())
            best = min(best, float(((ac - scale * rotated) ** 2).sum()))
    return math.sqrt(best / xa.shape[0])


def euclidean_distance_matrix(points) -> DistanceMatrix:
    """Exact pairwise Euclidean distances of a 2D point set."""
    p = np.asarray(points, dtype=float)
    diff = p[:, None, :] - p[None, :, :]
    return DistanceMatrix(np.hypot(diff[..., 0], diff[..., 1]))
