import math

import numpy as np
import pytest

from stresslayout import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    PivotConfig,
    PowerIterationError,
    all_pairs_shortest_paths,
    classical_mds,
    cycle_graph,
    grid_graph,
    path_graph,
    pivot_mds,
    procrustes_error,
    random_init,
)
from stresslayout.initializers import choose_pivots
from helpers import (
    cmds_eigh_oracle,
    euclidean_distance_matrix,
    random_connected_graph,
    top_eigenvalues,
)


def pairwise_lengths(layout):
    x = np.asarray(layout)
    diff = x[:, None, :] - x[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


class TestRandomInit:
    def test_deterministic(self):
        assert np.array_equal(random_init(20, 9), random_init(20, 9))

    def test_unit_square(self):
        x = random_init(500, 1)
        assert x.min() >= 0.0 and x.max() <= 1.0

    def test_large_sample_mean(self):
        x = random_init(10_000, 123)
        assert 0.45 <= x[:, 0].mean() <= 0.55
        assert 0.45 <= x[:, 1].mean() <= 0.55

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            random_init(0, 1)


class TestClassicalMds:
    def test_two_points(self):
        layout = classical_mds(DistanceMatrix([[0.0, 1.0], [1.0, 0.0]]))
        assert math.hypot(*(layout[0] - layout[1])) == pytest.approx(1.0, abs=1e-9)

    def test_collinear_triple(self):
        dist = all_pairs_shortest_paths(path_graph(3))
        layout = classical_mds(dist)
        assert np.allclose(layout[:, 0], [1.0, 0.0, -1.0], atol=1e-6)
        assert np.abs(layout[:, 1]).max() < 1e-6
        # dense eigendecomposition oracle of the same double-centered matrix
        oracle = cmds_eigh_oracle(dist)
        assert procrustes_error(layout, oracle) < 1e-7

    def test_rectangle_reproduces_distances(self):
        points = np.array([[0.0, 0.0], [3.0, 0.0], [3.0, 1.0], [0.0, 1.0]])
        dist = euclidean_distance_matrix(points)
        layout = classical_mds(dist)
        got = pairwise_lengths(layout)
        want = dist.matrix
        off = want > 0
        assert np.abs((got[off] - want[off]) / want[off]).max() < 1e-6

    def test_output_centered(self):
        dist = all_pairs_shortest_paths(grid_graph(4, 5))
        layout = classical_mds(dist)
        assert np.abs(layout.mean(axis=0)).max() < 1e-9

    def test_deterministic(self):
        dist = all_pairs_shortest_paths(cycle_graph(12))
        assert np.array_equal(classical_mds(dist), classical_mds(dist))

    def test_relabeling_equivariance(self):
        g = random_connected_graph(12, 6, 4)
        dist = all_pairs_shortest_paths(g)
        perm = np.random.default_rng(0).permutation(12)
        permuted = DistanceMatrix(dist.matrix[np.ix_(perm, perm)])
        assert procrustes_error(classical_mds(permuted), classical_mds(dist)[perm]) < 1e-7

    def test_matches_eigh_oracle_on_generic_graphs(self):
        checked = 0
        for seed in range(30):
            n = 6 + (seed * 7) % 25
            g = random_connected_graph(n, n // 2, seed)
            dist = all_pairs_shortest_paths(g)
            eigs = top_eigenvalues(dist, 3)
            # skip tied spectra: the plane embedding is only unique when
            # the second and third eigenvalues are separated
            if eigs[1] - eigs[2] < 1e-6 * eigs[0]:
                continue
            checked += 1
            assert procrustes_error(classical_mds(dist), cmds_eigh_oracle(dist)) < 1e-6
        assert checked >= 20

    def test_needs_two_vertices(self):
        with pytest.raises(ValueError):
            classical_mds(DistanceMatrix([[0.0]]))

    def test_non_convergence_signals_with_partial(self):
        dist = all_pairs_shortest_paths(grid_graph(3, 3))
        with pytest.raises(PowerIterationError) as info:
            classical_mds(dist, max_iters=1)
        assert info.value.partial.shape == (9, 2)


class TestChoosePivots:
    def test_full_cover(self):
        g = grid_graph(4, 4)
        pivots = choose_pivots(g, 16, seed=3)
        assert sorted(pivots) == list(range(16))

    def test_deterministic_per_seed(self):
        g = cycle_graph(9)
        assert choose_pivots(g, 4, seed=7) == choose_pivots(g, 4, seed=7)

    def test_maxmin_with_tie_to_lowest_index(self):
        # cycle of 4 starting from vertex 0: farthest is 2, then the
        # remaining {1, 3} tie at distance 1 and the lower index wins
        g = cycle_graph(4)
        pivots = choose_pivots(g, 3, seed=0, first=0)
        assert pivots == [0, 2, 1]

    def test_disconnected_raises(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError):
            choose_pivots(g, 2, seed=0)


class TestPivotMds:
    def test_path3_matches_cmds(self):
        g = path_graph(3)
        dist = all_pairs_shortest_paths(g)
        layout = pivot_mds(g, PivotConfig(k=3, seed=0))
        assert procrustes_error(layout, classical_mds(dist)) < 1e-6

    def test_all_pivots_equals_cmds(self):
        for seed in (0, 1, 2):
            g = random_connected_graph(14, 8, seed + 40)
            dist = all_pairs_shortest_paths(g)
            eigs = top_eigenvalues(dist, 3)
            if eigs[1] - eigs[2] < 1e-6 * eigs[0]:
                continue
            layout = pivot_mds(g, PivotConfig(k=14, seed=seed))
            assert procrustes_error(layout, classical_mds(dist)) < 1e-6

    def test_grid_half_pivots_close_to_cmds(self):
        g = grid_graph(10, 10)
        dist = all_pairs_shortest_paths(g)
        full = classical_mds(dist)
        approx = pivot_mds(g, PivotConfig(k=50, seed=0))
        radius = math.sqrt(((full - full.mean(axis=0)) ** 2).sum() / g.n)
        # threshold frozen from measurement; the grid's tied spectrum leaves
        # a rotation freedom that procrustes cannot fully absorb
        assert procrustes_error(full, approx) < 0.12 * radius

    def test_deterministic(self):
        g = grid_graph(5, 5)
        a = pivot_mds(g, PivotConfig(k=10, seed=3))
        b = pivot_mds(g, PivotConfig(k=10, seed=3))
        assert np.array_equal(a, b)

    def test_oversized_k_clamped_with_warning(self):
        g = path_graph(5)
        with pytest.warns(UserWarning, match="clamped"):
            layout = pivot_mds(g, PivotConfig(k=50, seed=0))
        assert layout.shape == (5, 2)

    def test_needs_two_vertices(self):
        with pytest.raises(ValueError):
            pivot_mds(Graph.from_edges(1, []), PivotConfig(k=1))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            PivotConfig(k=0)
        with pytest.raises(ValueError):
            PivotConfig(power_tolerance=-1.0)
