"""
Bessel functions of the first kind for integer order.

Small arguments use the ascending power series; larger ones use Miller's
downward recurrence normalized with J0 + 2 sum_k J_2k = 1. Accuracy is about
1e-13 absolute for orders up to 64 and |x| up to 50.
"""
from __future__ import annotations

import math
from typing import List

from app.constants import BESSEL_MAX_ARG, BESSEL_MAX_ORDER
from app.errors import DomainError

SERIES_LIMIT = 5.0
_RESCALE = 1e250


def _check(m: int, x: float) -> None:
    if m < 0 or m > BESSEL_MAX_ORDER:
        raise DomainError(f"ERROR: Bessel order must lie in [0, {BESSEL_MAX_ORDER}], got {m}")
    if not math.isfinite(x) or abs(x) > BESSEL_MAX_ARG:
        raise DomainError(f"ERROR: Bessel argument must satisfy |x| <= {BESSEL_MAX_ARG}, got {x}")


def _series(m: int, x: float) -> float:
    half = 0.5 * x
    if half == 0.0:
        return 1.0 if m == 0 else 0.0
    term = math.exp(m * math.log(abs(half)) - math.lgamma(m + 1))
    if half < 0 and m % 2 == 1:
        term = -term
    total = term
    q = -half * half
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + m))
        total += term
        if abs(term) <= 1e-17 * abs(total) or k > 200:
            return total


def _miller(m_max: int, x: float) -> List[float]:
    """J_0..J_{m_max}(x) for x > 0 by normalized downward recurrence."""
    top = max(m_max, int(x)) + 1
    start = 2 * ((top + 20 + int(math.sqrt(40.0 * top))) // 2)
    values = [0.0] * (start + 2)
    j_next, j_cur = 0.0, 1e-30
    values[start] = j_cur
    for k in range(start, 0, -1):
        j_prev = (2.0 * k / x) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        values[k - 1] = j_cur
        if abs(j_cur) > _RESCALE:
            scale = 1.0 / _RESCALE
            j_cur *= scale
            j_next *= scale
            for i in range(k - 1, start + 1):
                values[i] *= scale
    norm = values[0] + 2.0 * sum(values[i] for i in range(2, start + 1, 2))
    return [v / norm for v in values[: m_max + 1]]


def bessel_j(m: int, x: float) -> float:
    """J_m(x) for integer 0 <= m <= 64 and |x| <= 50."""
    _check(m, x)
    if abs(x) <= SERIES_LIMIT:
        return _series(m, x)
    value = _miller(m, abs(x))[m]
    return -value if (x < 0 and m % 2 == 1) else value


def bessel_j_orders(m_max: int, x: float) -> List[float]:
    """[J_0(x), ..., J_{m_max}(x)] from one evaluation pass."""
    _check(m_max, x)
    if abs(x) <= SERIES_LIMIT:
        return [_series(m, x) for m in range(m_max + 1)]
    values = _miller(m_max, abs(x))
    if x < 0:
        values = [-v if m % 2 == 1 else v for m, v in enumerate(values)]
    return values
