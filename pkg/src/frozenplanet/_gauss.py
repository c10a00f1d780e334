"""Gauss-Legendre levels on [0, 1] and the node-doubling convergence driver.

Every quadrature in the package is a weighted sum over one of these levels.
Levels are cached per node count (read-only arrays, safe to share across
threads) because the deepest levels are expensive to generate.
"""

from __future__ import annotations

import threading
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.special import roots_legendre

from .errors import ConvergenceError


class Level(NamedTuple):
    """Nodes/weights on [0, 1] plus factors precomputed for the ratio kernel.

    The ratio integrals are evaluated in the angle variable theta on
    [0, pi/2] (node theta_i = (pi/2) * u_i), so the level carries

        s2  = sin(theta_i)**2
        ws  = pi * w * s2        (weight for the k = 1/2 moment)
        wss = pi * w * s2**2     (weight for the k = 3/2 moment)
    """

    u: np.ndarray
    w: np.ndarray
    s2: np.ndarray
    ws: np.ndarray
    wss: np.ndarray


_CACHE: dict[int, Level] = {}
_LOCK = threading.Lock()


def gauss_level(n: int) -> Level:
    """Return the cached Gauss-Legendre level with ``n`` nodes on [0, 1]."""
    level = _CACHE.get(n)
    if level is not None:
        return level
    with _LOCK:
        level = _CACHE.get(n)
        if level is None:
            x, w = roots_legendre(n)
            u = 0.5 * (x + 1.0)
            w = 0.5 * w
            s = np.sin(0.5 * np.pi * u)
            s2 = s * s
            level = Level(u, w, s2, np.pi * w * s2, np.pi * w * s2 * s2)
            for arr in level:
                arr.setflags(write=False)
            _CACHE[n] = level
    return level


def converge_levels(
    estimate: Callable[[int], Sequence[float]],
    base_nodes: int,
    max_doublings: int,
    rel_tol: float,
) -> tuple[float, ...]:
    """Double the node count until two consecutive estimates agree twice.

    ``estimate(n)`` returns a tuple of values computed on the ``n``-node
    level; every component must satisfy the relative tolerance on two
    successive doublings before the last estimate is accepted.
    """

    def agree(curr, prev):
        return all(
            abs(c - p) <= rel_tol * max(abs(c), 1e-300)
            for c, p in zip(curr, prev)
        )

    n = base_nodes
    prev = tuple(estimate(n))
    agreed_once = False
    for _ in range(max_doublings):
        n *= 2
        curr = tuple(estimate(n))
        if agree(curr, prev) and agreed_once:
            return curr
        agreed_once = agree(curr, prev)
        prev = curr
    raise ConvergenceError(
        f"quadrature did not settle to rel_tol={rel_tol:g} within "
        f"{max_doublings} doublings from {base_nodes} nodes"
    )
