"""Normalized Chebyshev recurrences over ints or Laurent polynomials.

Both families satisfy P(k+1) = x*P(k) - P(k-1); the first kind starts at
T0 = 2, T1 = x, the second kind at S0 = 1, S1 = x with the backward
extension S(-1) = 0, S(-2) = -1.  They are related by T(k) = S(k) - S(k-2).
"""

from __future__ import annotations

from .laurent import LaurentPoly


def _two_like(x):
    if isinstance(x, LaurentPoly):
        return LaurentPoly.constant(x.vars, 2)
    return 2


def _const_like(x, value):
    if isinstance(x, LaurentPoly):
        return LaurentPoly.constant(x.vars, value)
    return value


def chebyshev_T(k: int, x):
    """First-kind value T_k(x); x may be an int or a LaurentPoly."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return _two_like(x)
    prev, cur = _two_like(x), x
    for _ in range(k - 1):
        prev, cur = cur, x * cur - prev
    return cur


def chebyshev_S(k: int, x):
    """Second-kind value S_k(x) for k >= -2."""
    if k < -2:
        raise ValueError("k must be at least -2")
    if k == -2:
        return _const_like(x, -1)
    if k == -1:
        return _const_like(x, 0)
    prev, cur = _const_like(x, 0), _const_like(x, 1)
    for _ in range(k):
        prev, cur = cur, x * cur - prev
    return cur
