"""
QThermo-Py Gibbs 分布

    p(z | n, β) = exp(-βz)·(1-z²)^(n-1/2) / Z_n(β),   z ∈ [-1, 1]
    Z_n(β) = √π·Γ(n+1/2)·Î_n(β)

Î_n 是约化 Bessel 函数，在 β = 0 处有限，β = 0 时 p 恰为结构函数。
"""

import math
from typing import Optional, Union

import numpy as np

from ..core.exceptions import DomainExceededError
from ..quadrature import QuadratureSpec
from ..special import bessel_i_reduced, sqrt_pi_gamma_half
from .models import GibbsParams

ArrayLike = Union[float, np.ndarray]


def partition_reduced(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """Z_n(β) = ∫ exp(-βz)(1-z²)^(n-1/2) dz；严格为正，关于 β 偶"""
    return sqrt_pi_gamma_half(gp.n) * bessel_i_reduced(gp.n, gp.beta, spec)


def log_partition(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    return math.log(partition_reduced(gp, spec))


def gibbs_pdf(gp: GibbsParams, z: ArrayLike, spec: Optional[QuadratureSpec] = None) -> ArrayLike:
    """
    Gibbs 密度，z 可为标量或数组

    Raises:
        DomainExceededError: |z| > 1
    """
    values = np.asarray(z, dtype=float)
    if not np.all(np.abs(values) <= 1.0):
        raise DomainExceededError("z must satisfy |z| <= 1", argument="z", value=z)
    density = np.exp(-gp.beta * values) * (1.0 - values * values) ** (gp.n - 0.5) / partition_reduced(gp, spec)
    return float(density) if np.ndim(z) == 0 else density
