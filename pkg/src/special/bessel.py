"""
QThermo-Py 修正 Bessel 函数

整数阶 I_n(β) 的三条计算路径：
- Poisson 积分表示（经 Gegenbauer 积分）
- 幂级数（独立参照）
- 约化函数 Î_n(β) = I_n(β)/(β/2)^n，在 β = 0 处有限且为偶函数

下游统一使用约化函数，避免 (β/2)^n / I_n(β) 在 β = 0 处的 0/0。
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Annotated, Optional

import numpy as np
from pydantic import Field, TypeAdapter, ValidationError

from ..core.exceptions import BesselOverflowError, DomainExceededError
from ..core.limits import POISSON_MAX_ABS_BETA
from ..quadrature import QuadratureSpec, integrate_gegenbauer
from ..utils.logger import get_logger

logger = get_logger(__name__)

MAX_BESSEL_ORDER = 20
SERIES_MAX_ABS_BETA = 30.0
SERIES_REL_TOL = 1e-17
SERIES_MAX_TERMS = 200

BesselOrder = Annotated[int, Field(ge=0, le=MAX_BESSEL_ORDER)]
_order_adapter = TypeAdapter(BesselOrder)


def _check_order(n: int) -> int:
    try:
        return _order_adapter.validate_python(n)
    except ValidationError as e:
        raise DomainExceededError(
            f"Bessel order must be an integer in [0, {MAX_BESSEL_ORDER}], got {n!r}",
            argument="n",
            value=n,
        ) from e


def _check_overflow(beta: float) -> None:
    if not math.isfinite(beta) or abs(beta) > POISSON_MAX_ABS_BETA:
        raise BesselOverflowError(
            f"|beta| must not exceed {POISSON_MAX_ABS_BETA}, got {beta}", beta=beta
        )


@lru_cache(maxsize=64)
def _half_integer_ratio(n: int) -> Fraction:
    # Γ(n+1/2) = (2n)!·√π / (4^n·n!)
    return Fraction(math.factorial(2 * n), 4**n * math.factorial(n))


def gamma_half_integer(n: int) -> float:
    """Γ(n + 1/2)，由整数运算得到有理系数后乘 √π"""
    return float(_half_integer_ratio(_check_order(n))) * math.sqrt(math.pi)


def sqrt_pi_gamma_half(n: int) -> float:
    """√π·Γ(n + 1/2) = π·(2n)!/(4^n·n!)"""
    return math.pi * float(_half_integer_ratio(_check_order(n)))


def _reduced_series(n: int, beta: float) -> float:
    x = 0.25 * beta * beta
    term = 1.0 / math.factorial(n)
    total = term
    for k in range(1, SERIES_MAX_TERMS):
        term *= x / (k * (n + k))
        total += term
        if term < SERIES_REL_TOL * total:
            break
    return total


def bessel_i_series(n: int, beta: float) -> float:
    """
    幂级数 Σ_k (β/2)^(n+2k) / (k!·(n+k)!)

    Args:
        n: 阶数
        beta: 自变量，|β| ≤ 30

    Returns:
        I_n(β)

    Raises:
        DomainExceededError: |β| > 30
    """
    n = _check_order(n)
    if not abs(beta) <= SERIES_MAX_ABS_BETA:
        raise DomainExceededError(
            f"series evaluation is validated for |beta| <= {SERIES_MAX_ABS_BETA}, got {beta}",
            argument="beta",
            value=beta,
        )
    return (0.5 * beta) ** n * _reduced_series(n, beta)


def bessel_i_poisson(n: int, beta: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    Poisson 积分表示

        I_n(β) = (β/2)^n / (√π·Γ(n+1/2)) · ∫_{-1}^{1} exp(-βz)·(1-z²)^(n-1/2) dz

    Args:
        n: 阶数
        beta: 自变量，|β| ≤ 700
        spec: 积分规格

    Returns:
        I_n(β)
    """
    n = _check_order(n)
    _check_overflow(beta)
    integral = integrate_gegenbauer(lambda z: np.exp(-beta * z), n, spec, vectorized=True)
    return (0.5 * beta) ** n / sqrt_pi_gamma_half(n) * integral


def bessel_i_reduced(n: int, beta: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    约化函数 Î_n(β) = I_n(β)/(β/2)^n = Σ_k (β²/4)^k / (k!·(n+k)!)

    |β| ≤ 30 时用级数，否则用 Poisson 积分除以 (β/2)^n。结果严格为正、关于 β
    为偶函数，Î_n(0) = 1/n!。
    """
    n = _check_order(n)
    _check_overflow(beta)
    if abs(beta) <= SERIES_MAX_ABS_BETA:
        return _reduced_series(n, beta)
    return bessel_i_poisson(n, beta, spec) / (0.5 * beta) ** n


def bessel_i(n: int, beta: float, spec: Optional[QuadratureSpec] = None) -> float:
    """I_n(β)：|β| ≤ 30 用级数，更大时用 Poisson 积分"""
    if abs(beta) <= SERIES_MAX_ABS_BETA:
        return bessel_i_series(n, beta)
    return bessel_i_poisson(n, beta, spec)
