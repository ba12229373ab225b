"""Shared test utilities."""

import numpy as np

from curvkind import kulkarni_nomizu, ricci_scalar


def make_einstein(R):
    """Remove the trace-free Ricci part so the result is Einstein.

    Subtracting (ric0 o g)/(n-2) shifts Ric by -ric0 and leaves the scalar
    curvature unchanged; needs n >= 3.
    """
    s = ricci_scalar(R)
    ric0 = s.ricci - (s.scalar / R.n) * np.eye(R.n)
    return R + kulkarni_nomizu(ric0, np.eye(R.n)) * (-1.0 / (R.n - 2))


def random_symmetric(n, rng):
    A = rng.standard_normal((n, n))
    return A + A.T
