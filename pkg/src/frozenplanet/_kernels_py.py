"""Pure NumPy fallback for the quadrature inner loops (see ``_kernels.pyx``)."""

import numpy as np


def ratio_pair(a, s2, ws, wss):
    """Return (I_half, I_three_half) evaluated on one fixed node level."""
    f = 1.0 / np.sqrt(s2 - a)
    return float(ws @ f), float(wss @ f)


def time_partial(a, theta, u, w):
    """Return int_0^theta cos(p)**2 / sqrt(cos(p)**2 - a) dp for theta <= pi/2."""
    s = np.sin(theta * u)
    cc = 1.0 - s * s
    return theta * float(w @ (cc / np.sqrt(cc - a)))
