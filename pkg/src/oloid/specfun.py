"""Complete elliptic integrals of the first and second kind.

Evaluated by the arithmetic-geometric mean (AGM) iteration, which converges
quadratically; 8-10 iterations reach double precision for any admissible
modulus.

Both functions take the elliptic *modulus* k, NOT the parameter m = k**2.
Conventions differ across references and software (SciPy's ``ellipk``, for
example, takes the parameter), so check which one a formula uses before
porting it.
"""

from __future__ import annotations

import math

__all__ = ["agm", "ellipk", "ellipe"]

_MAX_ITER = 64


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of nonnegative ``a`` and ``b``.

    Iterates (a, b) <- ((a+b)/2, sqrt(a*b)) until the pair agrees to
    4 ulp, which quadratic convergence reaches well before the iteration
    cap.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or a < 0.0 or b < 0.0:
        raise ValueError("agm requires finite nonnegative arguments")
    for _ in range(_MAX_ITER):
        if abs(a - b) <= 4.0 * math.ulp(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellipk(k: float) -> float:
    """Complete elliptic integral of the first kind, K(k).

    K(k) = integral_0^{pi/2} dx / sqrt(1 - k^2 sin^2 x), computed as
    pi / (2 agm(1, sqrt(1 - k^2))).  Requires 0 <= k < 1: K diverges at
    k = 1, and no consumer here needs that limit, so it is a domain error
    rather than +inf.
    """
    if not 0.0 <= k < 1.0:
        raise ValueError(f"ellipk requires 0 <= k < 1, got {k!r}")
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - k * k)))


def ellipe(k: float) -> float:
    """Complete elliptic integral of the second kind, E(k).

    E(k) = integral_0^{pi/2} sqrt(1 - k^2 sin^2 x) dx for 0 <= k <= 1,
    via the descending Landen / AGM recurrence with the concurrent sum

        E = K * (1 - sum_{n>=0} 2^(n-1) c_n^2),
        c_0 = k,  c_{n+1} = (a_n - b_n) / 2.
    """
    if not 0.0 <= k <= 1.0:
        raise ValueError(f"ellipe requires 0 <= k <= 1, got {k!r}")
    if k == 1.0:
        return 1.0
    a, b = 1.0, math.sqrt(1.0 - k * k)
    csum = 0.5 * k * k
    weight = 0.5
    for _ in range(_MAX_ITER):
        if abs(a - b) <= 4.0 * math.ulp(a):
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        weight *= 2.0
        csum += weight * c * c
    return math.pi / (a + b) * (1.0 - csum)
