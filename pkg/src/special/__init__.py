"""
QThermo-Py Special 模块

整数阶修正 Bessel 函数 I_n 及其约化形式。

这种 Poisson 积分表示在文献中常被称作“修正球 Bessel 函数”，但对整数
n 它给出的是整数阶 I_n；这里严格按该积分实现。
"""

from .bessel import (
    MAX_BESSEL_ORDER,
    SERIES_MAX_ABS_BETA,
    POISSON_MAX_ABS_BETA,
    BesselOrder,
    bessel_i,
    bessel_i_poisson,
    bessel_i_reduced,
    bessel_i_series,
    gamma_half_integer,
    sqrt_pi_gamma_half,
)

__all__ = [
    "MAX_BESSEL_ORDER",
    "SERIES_MAX_ABS_BETA",
    "POISSON_MAX_ABS_BETA",
    "BesselOrder",
    "bessel_i",
    "bessel_i_poisson",
    "bessel_i_reduced",
    "bessel_i_series",
    "gamma_half_integer",
    "sqrt_pi_gamma_half",
]
