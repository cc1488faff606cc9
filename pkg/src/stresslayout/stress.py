"""The stress objective over 2D layouts, its gradient, and layout utilities.

A layout is a plain (n, 2) float array.  Stress sums, over unordered
vertex pairs, the squared deviation of layout distance from target
distance, weighted by the inverse squared target:

    sum_{i<j} (|x_i - x_j| - d_ij)**2 / d_ij**2
"""

from __future__ import annotations

import math

import numpy as np

from .graphs import DistanceMatrix


def as_layout(coords, n: int | None = None) -> np.ndarray:
    """Validate coordinates and return them as an (n, 2) float64 array."""
    x = np.array(coords, dtype=float)
    if x.ndim != 2 or x.shape[1] != 2:
        raise ValueError(f"layout must have shape (n, 2), got {x.shape}")
    if n is not None and x.shape[0] != n:
        raise ValueError(f"layout has {x.shape[0]} points, expected {n}")
    if not np.isfinite(x).all():
        raise ValueError("layout contains non-finite coordinates")
    return x


def stress(coords, dist: DistanceMatrix) -> float:
    """Weighted squared deviation of layout distances from targets.

    Terms are accumulated in fixed i<j lexicographic order with exact
    compensated summation, so the value is reproducible bit-for-bit.
    """
    x = as_layout(coords, dist.n)
    i, j = np.triu_indices(dist.n, 1)
    delta = x[i] - x[j]
    lengths = np.hypot(delta[:, 0], delta[:, 1])
    target = dist.matrix[i, j]
    terms = ((lengths - target) / target) ** 2
    return math.fsum(terms.tolist())


def stress_gradient(coords, dist: DistanceMatrix) -> np.ndarray:
    """Analytic gradient of stress, one (dx, dy) row per vertex.

    Undefined where two points coincide; raises ValueError there.
    """
    x = as_layout(coords, dist.n)
    n = dist.n
    d = dist.matrix
    diff = x[:, None, :] - x[None, :, :]
    lengths = np.hypot(diff[..., 0], diff[..., 1])
    off = ~np.eye(n, dtype=bool)
    if (lengths[off] == 0.0).any():
        raise ValueError("coincident points: gradient term is singular")
    eye = np.eye(n)
    coef = 2.0 * (lengths - d) / ((d + eye) ** 2 * (lengths + eye))
    np.fill_diagonal(coef, 0.0)
    return (coef[:, :, None] * diff).sum(axis=1)


def center(coords) -> np.ndarray:
    """Translate the layout so its centroid is at the origin."""
    x = as_layout(coords)
    return x - x.mean(axis=0)


def procrustes_error(a, b) -> float:
    """RMS residual after optimally mapping layout b onto layout a.

    The map is the best similarity transform: translation, rotation or
    reflection, and uniform scaling.  Zero means the layouts agree up to
    such a transform.
    """
    xa = as_layout(a)
    xb = as_layout(b)
    if xa.shape[0] != xb.shape[0]:
        raise ValueError(f"layouts differ in size: {xa.shape[0]} vs {xb.shape[0]}")
    if xa.shape[0] < 2:
        raise ValueError("need at least two points")
    ac = xa - xa.mean(axis=0)
    bc = xb - xb.mean(axis=0)
    norm_a = (ac**2).sum()
    norm_b = (bc**2).sum()
    if norm_a == 0.0 or norm_b == 0.0:
        raise ValueError("degenerate layout: all points coincide")
    u, sigma, vt = np.linalg.svd(bc.T @ ac)
    rotation = (u @ vt).T
    scale = sigma.sum() / norm_b
    residual = ac - scale * (bc @ rotation.T)
    return math.sqrt((residual**2).sum() / xa.shape[0])
