"""Closed-form parameter algebra of the collinear mean-interaction model.

For nucleus charge mu > 1 the outer electron freezes at qbar2 while the
inner electron oscillates between the collision q1 = 0 and the turning
point q1max.  Everything here is elementary algebra in the gap ratio
gamma = (qbar2 - qbar1) / qbar1; the quadrature-backed pieces live in
:mod:`frozenplanet.quadrature`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def gamma_of_mu(mu: float) -> float:
    """Gap ratio gamma = (1 + sqrt(mu)) / (mu - 1) for nucleus charge mu > 1.

    Decreasing in mu; below mu = 1 the outer electron is not bound and no
    periodic orbit exists.
    """
    if mu <= 1.0:
        raise DomainError(
            f"mu={mu!r}: for charge mu <= 1 the outer electron is unbound "
            "(the atom ionizes) and no periodic orbit exists"
        )
    return (1.0 + math.sqrt(mu)) / (mu - 1.0)


def mu_of_gamma(gamma: float) -> float:
    """Inverse of :func:`gamma_of_mu`: mu = ((gamma + 1) / gamma)**2.

    Defined for gamma > 0, where it is the exact inverse (the map is
    singular at gamma = 0 and loses its meaning for negative gamma).
    """
    if gamma <= 0.0:
        raise DomainError(f"mu_of_gamma requires gamma > 0, got {gamma!r}")
    r = (gamma + 1.0) / gamma
    return r * r


def qbar2_of(gamma: float, qbar1: float) -> float:
    """Outer-electron rest position qbar2 = (gamma + 1) * qbar1."""
    if qbar1 <= 0.0:
        raise DomainError(f"qbar2_of requires qbar1 > 0, got {qbar1!r}")
    return (gamma + 1.0) * qbar1


def kappa_of(gamma: float, qbar1: float) -> float:
    """Inner-electron energy parameter kappa = 2 / (gamma**2 * qbar1) - 1.

    Its sign decides whether the inner electron's swing reaches past the
    outer electron (kappa > 0), exactly touches it (kappa = 0), or stays
    short (kappa < 0).
    """
    if gamma == 0.0:
        raise DomainError("kappa_of requires gamma != 0")
    if qbar1 <= 0.0:
        raise DomainError(f"kappa_of requires qbar1 > 0, got {qbar1!r}")
    return 2.0 / (gamma * gamma * qbar1) - 1.0


@dataclass(frozen=True)
class SigmaPair:
    """Scaled turning points of the inner-electron potential.

    ``plus``/``minus`` are the two roots of
        sigma**2 - 2 * (2 - gamma**2 * x) * sigma - 4 * (gamma + 1)**2 = 0
    evaluated at the point (gamma, x); they satisfy
    plus * minus = -4 * (gamma + 1)**2 exactly, and x * sigma / 2 recovers
    the physical turning points when x is the orbit mean qbar1.
    """

    plus: float
    minus: float
    gamma: float
    x: float


def sigma_pair(gamma: float, x: float) -> SigmaPair:
    """Both roots sigma(gamma, x), computed without subtractive cancellation.

    The root whose sign matches s = 2 - gamma**2 * x is taken from the
    quadratic formula directly; the other comes from the product identity
    plus * minus = -4 * (gamma + 1)**2.  Defined for all real gamma, x
    (``plus`` only degenerates to 0 at gamma = -1, x >= 2).
    """
    s = 2.0 - gamma * gamma * x
    gp1 = gamma + 1.0
    w = math.hypot(s, 2.0 * gp1)
    if s >= 0.0:
        plus = s + w
        minus = -4.0 * gp1 * gp1 / plus if plus != 0.0 else 0.0
    else:
        minus = s - w
        plus = -4.0 * gp1 * gp1 / minus
    return SigmaPair(plus=plus, minus=minus, gamma=gamma, x=x)


def q1_extrema(gamma: float, qbar1: float) -> tuple[float, float]:
    """(q1max, q1antimax): swing amplitude and its negative mirror root.

    q1max = sigma_plus * qbar1 / 2 is the inner electron's turning point;
    q1antimax = sigma_minus * qbar1 / 2 < 0 is the spurious second root of
    the same energy relation.  Their ratio parametrizes every quadrature.
    """
    if qbar1 <= 0.0:
        raise DomainError(f"q1_extrema requires qbar1 > 0, got {qbar1!r}")
    pair = sigma_pair(gamma, qbar1)
    return 0.5 * pair.plus * qbar1, 0.5 * pair.minus * qbar1


def q1max_of_kappa(kappa: float, gamma: float, qbar1: float) -> float:
    """Positive root of q**2 - gamma**2 * kappa * qbar1**2 * q = mu * gamma**2 * qbar1**2.

    Same amplitude as ``q1_extrema(...)[0]`` but parametrized by kappa;
    uses mu * gamma**2 = (gamma + 1)**2 so mu never has to be formed.
    """
    if qbar1 <= 0.0:
        raise DomainError(f"q1max_of_kappa requires qbar1 > 0, got {qbar1!r}")
    b = gamma * gamma * kappa * qbar1 * qbar1
    gp1q = (gamma + 1.0) * qbar1
    w = math.hypot(b, 2.0 * gp1q)
    if b >= 0.0:
        return 0.5 * (b + w)
    return 2.0 * gp1q * gp1q / (w - b)
