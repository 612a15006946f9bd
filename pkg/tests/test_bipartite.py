"""Bipartiteness ratios, rounding, and the doubling-map sequence."""

import numpy as np
import pytest

import stepgraphon as sg
from conftest import (
    random_connected_graph,
    random_connected_graphon,
    random_grid_function,
    random_signed_labels,
)


def _k3_graph():
    return sg.build_graph([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def _c5_graph():
    weights = np.zeros((5, 5))
    for i in range(5):
        weights[i, (i + 1) % 5] = weights[(i + 1) % 5, i] = 1.0
    return sg.build_graph(weights)


def _partition_from_labels(labels):
    left = [i for i, v in enumerate(labels) if v == 1]
    right = [i for i, v in enumerate(labels) if v == 2]
    return sg.SignedPartition(left, right)


def test_beta_partition_hand_values():
    const = sg.constant_graphon(0.7, 8)
    halves = sg.SignedPartition(range(4), range(4, 8))
    assert sg.beta_partition(const, halves) == pytest.approx(0.5, abs=1e-12)

    bip = sg.sbm_graphon([0.5, 0.5], [[0.0, 0.8], [0.8, 0.0]], 4)
    natural = sg.SignedPartition([0, 1], [2, 3])
    assert sg.beta_partition(bip, natural) == 0.0

    k3 = sg.associated_graphon(_k3_graph(), 1)
    assert sg.beta_partition(k3, sg.SignedPartition([0], [1])) == pytest.approx(0.25, abs=1e-15)


def test_beta_partition_errors():
    blocks = sg.sbm_graphon([0.5, 0.5], [[0.9, 0.0], [0.0, 0.9]], 4)
    with pytest.raises(sg.NotConnectedError):
        sg.beta_partition(blocks, sg.SignedPartition([0], [1]))
    with pytest.raises(sg.OutOfRangeError):
        sg.beta_partition(sg.constant_graphon(0.5, 2), sg.SignedPartition([0], [5]))


def test_signed_indicator():
    p = sg.SignedPartition([0], [1])
    f = sg.signed_indicator(p, 3)
    assert np.array_equal(f.values, [-1.0, 1.0, 0.0])
    assert np.array_equal(sg.signed_indicator(sg.SignedPartition([], [0, 1]), 2).values, [1.0, 1.0])
    assert np.array_equal(
        sg.signed_indicator(sg.SignedPartition([0, 1], []), 2).values, [-1.0, -1.0]
    )


def test_partition_function_identity():
    # ratio of a partition equals the anti-Dirichlet Rayleigh form of its
    # signed indicator
    rng = np.random.default_rng(211)
    for _ in range(300):
        w = random_connected_graphon(rng, m_max=10)
        labels = random_signed_labels(rng, w.m)
        p = _partition_from_labels(labels)
        f = sg.signed_indicator(p, w.m)
        lhs = sg.beta_partition(w, p)
        rhs = sg.antidirichlet(w, f) / (4.0 * sg.inner_v(w, f, f))
        assert abs(lhs - rhs) < 1e-12


def test_constant_closed_form():
    rng = np.random.default_rng(223)
    w = sg.constant_graphon(0.7, 12)
    for _ in range(100):
        labels = random_signed_labels(rng, 12)
        p = _partition_from_labels(labels)
        mu_left = len(p.left) / 12.0
        mu_right = len(p.right) / 12.0
        expected = 0.5 + (mu_left - mu_right) ** 2 / (2.0 * (mu_left + mu_right))
        assert sg.beta_partition(w, p) == pytest.approx(expected, abs=1e-12)


def test_beta_exhaustive_known_values():
    k2 = sg.build_graphon([[0.0, 1.0], [1.0, 0.0]])
    report = sg.beta_exhaustive(k2)
    assert report.beta == 0.0
    assert report.witness.as_dict() == {"left": [0], "right": [1]}

    k3 = sg.associated_graphon(_k3_graph(), 1)
    report = sg.beta_exhaustive(k3)
    assert report.beta == pytest.approx(0.25, abs=1e-15)
    assert report.witness.as_dict() == {"left": [0], "right": [1]}

    c5 = sg.associated_graphon(_c5_graph(), 1)
    report = sg.beta_exhaustive(c5)
    assert report.beta == pytest.approx(0.125, abs=1e-15)
    assert report.witness.as_dict() == {"left": [0, 2], "right": [1, 3]}


def test_beta_exhaustive_consistency_and_cap():
    rng = np.random.default_rng(227)
    for _ in range(30):
        w = random_connected_graphon(rng, m_max=7)
        report = sg.beta_exhaustive(w)
        direct = sg.beta_partition(w, report.witness)
        assert abs(report.beta - direct) < 1e-12
        assert report.beta <= 0.5 + 1e-12
    with pytest.raises(sg.TooLargeError):
        sg.beta_exhaustive(sg.constant_graphon(0.5, 13))
    blocks = sg.sbm_graphon([0.5, 0.5], [[0.9, 0.0], [0.0, 0.9]], 4)
    with pytest.raises(sg.NotConnectedError):
        sg.beta_exhaustive(blocks)


def test_beta_graph_exact_known_values():
    assert sg.beta_graph_exact(sg.build_graph([[0, 1], [1, 0]])).beta == 0.0
    assert sg.beta_graph_exact(_k3_graph()).beta == pytest.approx(0.25, abs=1e-15)
    c4 = sg.build_graph([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
    report = sg.beta_graph_exact(c4)
    assert report.beta == 0.0
    assert report.witness.as_dict() == {"left": [0, 2], "right": [1, 3]}
    assert sg.beta_graph_exact(_c5_graph()).beta == pytest.approx(0.125, abs=1e-15)


def test_beta_tilde_hand_values():
    k3 = _k3_graph()
    half = sg.FractionalBipartition([0.5] * 3, [0.5] * 3)
    assert sg.beta_tilde(k3, half) == pytest.approx(0.5, abs=1e-15)
    integral = sg.FractionalBipartition([1, 0, 0], [0, 1, 0])
    assert sg.beta_tilde(k3, integral) == pytest.approx(0.25, abs=1e-15)
    all_left = sg.FractionalBipartition([1, 1, 1], [0, 0, 0])
    assert sg.beta_tilde(k3, all_left) == pytest.approx(1.0, abs=1e-15)


def test_beta_tilde_extends_partition_ratio():
    rng = np.random.default_rng(229)
    for _ in range(100):
        g = random_connected_graph(rng, n_max=7)
        labels = random_signed_labels(rng, g.n)
        alpha = (labels == 1).astype(float)
        gamma = (labels == 2).astype(float)
        fb = sg.FractionalBipartition(alpha, gamma)
        p = _partition_from_labels(labels)
        w = sg.associated_graphon(g, 1)
        assert abs(sg.beta_tilde(g, fb) - sg.beta_partition(w, p)) < 1e-12


def test_beta_wg_search_known_values():
    k2 = sg.build_graph([[0, 1], [1, 0]])
    value, fb = sg.beta_wg_search(k2, restarts=5, seed=1)
    assert value == 0.0
    value, fb = sg.beta_wg_search(_k3_graph(), restarts=20, seed=42)
    assert value == pytest.approx(0.25, abs=1e-12)
    value, fb = sg.beta_wg_search(_c5_graph(), restarts=20, seed=42)
    assert value == pytest.approx(0.125, abs=1e-12)


def test_beta_wg_search_contract():
    rng = np.random.default_rng(233)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=7)
        exact = sg.beta_graph_exact(g).beta
        value, fb = sg.beta_wg_search(g, restarts=20, seed=9)
        # certified upper bound, never below a quarter of the exact ratio
        assert exact / 4.0 - 1e-9 <= value <= exact + 1e-9
        assert abs(sg.beta_tilde(g, fb) - value) < 1e-12
    looped = sg.build_graph([[0.5, 1], [1, 0]])
    with pytest.raises(sg.NotLooplessError):
        sg.beta_wg_search(looped, restarts=1, seed=1)


def test_threshold_rounding_hand_values():
    bip = sg.sbm_graphon([0.5, 0.5], [[0.0, 0.8], [0.8, 0.0]], 4)
    f = sg.GridFunction([1.0, 1.0, -1.0, -1.0])
    report = sg.threshold_rounding(bip, f)
    assert report.beta == 0.0
    assert report.threshold == 1.0

    k3 = sg.associated_graphon(_k3_graph(), 1)
    report = sg.threshold_rounding(k3, sg.GridFunction([1.0, -1.0, 0.0]))
    assert report.beta == pytest.approx(0.25, abs=1e-15)
    assert report.witness.as_dict() == {"left": [1], "right": [0]}

    const = sg.constant_graphon(0.7, 2)
    report = sg.threshold_rounding(const, sg.GridFunction([1.0, -1.0]))
    assert report.beta == pytest.approx(0.5, abs=1e-15)


def test_threshold_rounding_contract():
    rng = np.random.default_rng(239)
    for _ in range(200):
        w = random_connected_graphon(rng, m_max=10)
        f = random_grid_function(rng, w.m, rounded=bool(rng.integers(0, 2)))
        report = sg.threshold_rounding(w, f)
        bound = np.sqrt(sg.antidirichlet(w, f) / sg.inner_v(w, f, f))
        assert report.beta <= bound + 1e-9
        assert abs(sg.beta_partition(w, report.witness) - report.beta) < 1e-12
        assert report.threshold in np.abs(f.values if isinstance(f, sg.GridFunction) else f)


def test_rounding_sweep_structure():
    w = sg.constant_graphon(0.5, 4)
    f = sg.GridFunction([0.25, -0.5, 0.75, 0.0])
    sweep = sg.rounding_sweep(w, f)
    thresholds = [t for t, _ in sweep]
    assert thresholds == [0.25, 0.5, 0.75]
    for t, value in sweep:
        left = [i for i in range(4) if f.values[i] <= -t]
        right = [i for i in range(4) if f.values[i] >= t]
        expected = sg.beta_partition(w, sg.SignedPartition(left, right))
        assert value == pytest.approx(expected, abs=1e-15)
    with pytest.raises(sg.ZeroFunctionError):
        sg.rounding_sweep(w, sg.GridFunction([0.0, 0.0, 0.0, 0.0]))


def test_sweep_integral_check_hand_values():
    k3 = sg.associated_graphon(_k3_graph(), 1)
    num_lhs, num_rhs, den_lhs, den_rhs = sg.sweep_integral_check(k3, sg.GridFunction([1.0, -1.0, 0.0]))
    assert den_lhs == pytest.approx(8.0 / 9.0, abs=1e-15)
    assert den_rhs == pytest.approx(8.0 / 9.0, abs=1e-15)
    assert num_lhs <= num_rhs + 1e-12

    # plus-minus one valued functions give a single segment
    const = sg.constant_graphon(0.3, 2)
    _, _, den_lhs, den_rhs = sg.sweep_integral_check(const, sg.GridFunction([1.0, -1.0]))
    assert den_lhs == pytest.approx(den_rhs, abs=1e-15)


def test_sweep_integral_check_property():
    rng = np.random.default_rng(241)
    for _ in range(500):
        w = random_connected_graphon(rng, m_max=12)
        f = random_grid_function(rng, w.m, rounded=bool(rng.integers(0, 2)))
        num_lhs, num_rhs, den_lhs, den_rhs = sg.sweep_integral_check(w, f)
        assert abs(den_lhs - den_rhs) < 1e-12 * max(1.0, abs(den_rhs))
        assert num_lhs <= num_rhs + 1e-12


def test_doubling_partition_levels():
    assert sg.doubling_partition(0, 2).as_dict() == {"left": [0], "right": [1]}
    assert sg.doubling_partition(1, 4).as_dict() == {"left": [0, 2], "right": [1, 3]}
    assert sg.doubling_partition(2, 8).as_dict() == {"left": [0, 2, 4, 6], "right": [1, 3, 5, 7]}
    # finer grids spread each dyadic interval over several cells
    assert sg.doubling_partition(0, 4).as_dict() == {"left": [0, 1], "right": [2, 3]}
    with pytest.raises(sg.GridMisalignedError):
        sg.doubling_partition(2, 4)
    with pytest.raises(sg.GridMisalignedError):
        sg.doubling_partition(-1, 4)


def test_mixing_sequence_constant_is_exactly_half():
    values = sg.mixing_sequence(sg.constant_graphon(0.5, 64), 4)
    assert values == [0.5, 0.5, 0.5, 0.5, 0.5]
    values = sg.mixing_sequence(sg.constant_graphon(0.7, 32), 3)
    assert np.allclose(values, 0.5, atol=1e-12)


def test_mixing_sequence_two_block():
    w = sg.sbm_graphon([0.5, 0.5], [[0.9, 0.1], [0.1, 0.9]], 64)
    values = sg.mixing_sequence(w, 4)
    assert values[0] == pytest.approx(0.9, abs=1e-12)
    assert np.allclose(values[1:], 0.5, atol=1e-12)
    with pytest.raises(sg.GridMisalignedError):
        sg.mixing_sequence(sg.constant_graphon(0.5, 6), 2)


def test_mixing_sequence_upper_bounds_exhaustive():
    rng = np.random.default_rng(251)
    for _ in range(20):
        w = random_connected_graphon(rng, m_max=8, m_min=8)
        best = sg.beta_exhaustive(w).beta
        for value in sg.mixing_sequence(w, 2):
            assert value >= best - 1e-12
