from __future__ import annotations

from functools import lru_cache

from .poly import NUM_VARIABLES, MultiPoly


@lru_cache(maxsize=None)
def pq_int(n: int) -> MultiPoly:
    """The (p,q)-integer [n] = p^(n-1) + p^(n-2) q + ... + q^(n-1), with [0] = 0.

    Args:
        n (int): A non-negative integer.

    Returns:
        MultiPoly: The (p,q)-integer.
    """
    if n < 0:
        raise ValueError(f"(p,q)-integers are defined for n >= 0, not {n}.")
    rest = (0,) * (NUM_VARIABLES - 2)
    return MultiPoly({(i, n - 1 - i) + rest: 1 for i in range(n)})


@lru_cache(maxsize=None)
def pq_factorial(n: int) -> MultiPoly:
    result = MultiPoly.one()
    for i in range(1, n + 1):
        result = result * pq_int(i)
    return result


@lru_cache(maxsize=None)
def pq_binomial(n: int, k: int) -> MultiPoly:
    """The (p,q)-binomial [n]!/([k]![n-k]!), computed by exact division.

    Out-of-range k gives zero.
    """
    if k < 0 or k > n:
        return MultiPoly.zero()
    k = min(k, n - k)
    numerator = MultiPoly.one()
    for i in range(k):
        numerator = numerator * pq_int(n - i)
    return numerator.exact_div(pq_factorial(k))
