"""Shared random generators for the test suite."""

import numpy as np

from stepgraphon import (
    Graphon,
    WeightedGraph,
    build_graph,
    build_graphon,
    graph_is_connected,
    is_connected,
)


def random_connected_graphon(rng, m_max=10, m_min=2, zero_diagonal=True) -> Graphon:
    """Rejection-sample a connected step graphon with entries in [0, 1]."""
    sparsity_choices = (0.0, 0.25, 0.5)
    while True:
        m = int(rng.integers(m_min, m_max + 1))
        kernel = rng.uniform(0.0, 1.0, (m, m))
        kernel = (kernel + kernel.T) / 2
        sparsity = sparsity_choices[int(rng.integers(0, len(sparsity_choices)))]
        if sparsity > 0.0:
            drop = rng.uniform(0.0, 1.0, (m, m)) < sparsity
            kernel[np.logical_or(drop, drop.T)] = 0.0
        if zero_diagonal:
            np.fill_diagonal(kernel, 0.0)
        graphon = build_graphon(kernel)
        if is_connected(graphon):
            return graphon


def random_connected_graph(rng, n_max=8, n_min=2) -> WeightedGraph:
    """Loopless connected weighted graph, weights on the 0.1 grid."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        upper = np.triu(np.round(rng.uniform(0.1, 1.0, (n, n)), 1), 1)
        drop = np.triu(rng.uniform(0.0, 1.0, (n, n)) < 0.3, 1)
        upper[drop] = 0.0
        graph = build_graph(upper + upper.T)
        if graph_is_connected(graph):
            return graph


def random_grid_function(rng, m, rounded=False) -> np.ndarray:
    # rounded draws produce repeated |values| and exact zeros, which
    # exercises threshold ties in the sweep code
    while True:
        values = rng.standard_normal(m)
        if rounded:
            values = np.round(values, 1)
        if np.any(values != 0.0):
            return values


def random_signed_labels(rng, m) -> np.ndarray:
    """Cell labels in {0, 1, 2} with at least one nonzero."""
    while True:
        labels = rng.integers(0, 3, m)
        if np.any(labels != 0):
            return labels
