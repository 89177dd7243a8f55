from fractions import Fraction
from math import comb
from threading import Lock
from typing import List

__all__ = ["bernoulli", "bernoulli_via_tangent", "tangent_numbers"]

# B_0, B_1, ... with B_1 = -1/2; only even entries are ever handed out
_TABLE: List[Fraction] = [Fraction(1)]
_LOCK = Lock()


def _extend(n: int) -> None:
    with _LOCK:
        while len(_TABLE) <= n:
            m = len(_TABLE)
            total = sum(comb(m + 1, k) * _TABLE[k] for k in range(m))
            _TABLE.append(-total / (m + 1))


def _check_index(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"Bernoulli index must be even and >= 2, got {n}")


def bernoulli(n: int) -> Fraction:
    """
    Exact B_n for even n >= 2 from Σ_{k=0}^{n} C(n+1, k) B_k = 0.
    Values are memoised across calls.
    """
    _check_index(n)
    if len(_TABLE) <= n:
        _extend(n)
    return _TABLE[n]


def tangent_numbers(count: int) -> List[int]:
    """T_1, T_3, ..., T_{2count-1} (1, 2, 16, 272, ...) by the boustrophedon update."""
    if count < 1:
        return []
    t = [0] * (count + 1)
    t[1] = 1
    for k in range(2, count + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, count + 1):
        for j in range(k, count + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t[1:]


def bernoulli_via_tangent(n: int) -> Fraction:
    """Independent route: B_{2m} = (-1)^{m-1}·2m·T_{2m-1} / (4^m (4^m - 1))."""
    _check_index(n)
    m = n // 2
    t = tangent_numbers(m)[-1]
    four_m = 4 ** m
    sign = 1 if m % 2 else -1
    return Fraction(sign * n * t, four_m * (four_m - 1))
