"""Grover walk U = SC on the half-edge space of a truncated spidernet.

A walk state is a complex numpy vector indexed by the graph's half-edge
order.  The coin C acts blockwise at each vertex u as the Grover matrix
2/deg(u) - I on u's outgoing half-edges; the shift S sends the amplitude
of (u, v) to (v, u).  Both are real orthogonal involutions, so U = SC is
unitary with real matrix entries.

Starting from the isotropic state at the root, an n-step evolution only
reaches strata up to n + 1, so a truncation of radius >= n + 2 evolves
exactly like the infinite graph; :func:`evolve` enforces that margin.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, RadiusTooSmallError
from .graph import Spidernet

__all__ = [
    "isotropic_initial_state",
    "coin_apply",
    "shift_apply",
    "step",
    "evolve",
    "vertex_distribution",
    "stratum_distribution",
    "time_averaged_distribution",
]

#: A walk state is just a complex vector over half-edges.
WalkState = np.ndarray


def _check_state(g: Spidernet, state: np.ndarray) -> None:
    if state.shape != (g.num_half_edges,):
        raise DimensionMismatchError(
            f"state has shape {state.shape}, expected ({g.num_half_edges},)")


def isotropic_initial_state(g: Spidernet) -> WalkState:
    """Uniform superposition over the root's outgoing half-edges."""
    if g.radius < 1:
        raise RadiusTooSmallError("the root has no edges at radius 0")
    state = np.zeros(g.num_half_edges, dtype=np.complex128)
    a = g.params.a
    state[:a] = 1.0 / np.sqrt(a)
    return state


def coin_apply(g: Spidernet, state: WalkState) -> WalkState:
    """Apply the blockwise Grover coin: within each vertex block,
    value -> (2/deg) * block_sum - value."""
    _check_state(g, state)
    block_sums = np.add.reduceat(state, g.adj_ptr[:-1])
    factor = 2.0 / g.degrees[g.he_src]
    return factor * block_sums[g.he_src] - state


def shift_apply(g: Spidernet, state: WalkState) -> WalkState:
    """Apply the shift: amplitude of (u, v) moves to (v, u)."""
    _check_state(g, state)
    return state[g.reversal]


def step(g: Spidernet, state: WalkState) -> WalkState:
    """One walk step U = SC."""
    return shift_apply(g, coin_apply(g, state))


def evolve(g: Spidernet, state: WalkState, steps: int) -> WalkState:
    """Apply U ``steps`` times.

    Requires ``steps + 2 <= g.radius`` so that no amplitude ever reaches a
    boundary vertex with missing forward edges (the support after n steps
    is confined to strata <= n + 1).
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if steps + 2 > g.radius:
        raise RadiusTooSmallError(
            f"evolving {steps} steps needs radius >= {steps + 2}, graph has {g.radius}")
    for _ in range(steps):
        state = step(g, state)
    return state


def vertex_distribution(g: Spidernet, state: WalkState) -> np.ndarray:
    """Per-vertex find probabilities: sum of |amplitude|^2 over each
    vertex's outgoing half-edges."""
    _check_state(g, state)
    weights = np.abs(state) ** 2
    return np.add.reduceat(weights, g.adj_ptr[:-1])


def stratum_distribution(g: Spidernet, state: WalkState) -> np.ndarray:
    """Find probabilities aggregated per stratum (index = distance from root)."""
    probs = vertex_distribution(g, state)
    return np.bincount(g.vertex_stratum, weights=probs, minlength=g.radius + 1)


def time_averaged_distribution(g: Spidernet, state: WalkState, horizon: int) -> np.ndarray:
    """Cesaro mean (1/horizon) * sum of vertex distributions over steps
    n = 0 .. horizon-1."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if (horizon - 1) + 2 > g.radius:
        raise RadiusTooSmallError(
            f"averaging {horizon} steps needs radius >= {horizon + 1}, graph has {g.radius}")
    acc = vertex_distribution(g, state)
    for _ in range(horizon - 1):
        state = step(g, state)
        acc += vertex_distribution(g, state)
    return acc / horizon
