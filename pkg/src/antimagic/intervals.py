"""Closed-form arithmetic for the length-p integer intervals S_p(a).

S_p(a) = [p(a-1)+1, pa].  Terms are computed on demand (never materialized)
so that arbitrarily large blocks cost O(1) per entry.  The key property is
that the i-th ascending term of one interval plus the i-th descending term
of another is independent of i.
"""

from .errors import InvalidParameterError

ASCENDING = "ascending"
DESCENDING = "descending"


def interval(p, a):
    """Return (lo, hi) bounds of the a-th length-p interval."""
    if p < 1 or a < 1:
        raise InvalidParameterError(f"p and a must be positive, got p={p}, a={a}")
    return p * (a - 1) + 1, p * a


def term(p, a, direction, i):
    """i-th term (1-based) of the ascending or descending traversal of S_p(a)."""
    if not 1 <= i <= p:
        raise IndexError(f"i={i} out of range [1, {p}]")
    lo, hi = interval(p, a)
    if direction == ASCENDING:
        return lo + i - 1
    if direction == DESCENDING:
        return hi - i + 1
    raise InvalidParameterError(f"unknown direction {direction!r}")


def pair_sum(p, a, b):
    """Value of term(p,a,ascending,i) + term(p,b,descending,i), any i."""
    return p * (a + b - 1) + 1
