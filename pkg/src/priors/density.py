"""
QThermo-Py 先验密度与结构函数

归一化先验（QFI 行列式平方根）：

    n=1:  1 / (π²·√(1-r²))      (3 维单位球)
    n=2:  2 / (π³·√(1-r²))      (5 维单位球)

对 z 以外的坐标积分得到结构函数 C_n·(1-z²)^(n-1/2)，
C_n = Γ(n+1)/(√π·Γ(n+1/2))。
"""

import math
from typing import Union

import numpy as np

from ..core.exceptions import BoundaryPointError, DomainExceededError
from ..special import sqrt_pi_gamma_half
from ..state_space import BlochPoint
from .models import StructureFamily

ArrayLike = Union[float, np.ndarray]


def sphere_surface(k: int) -> float:
    """k 维单位球面 S^k 的面积 2π^((k+1)/2)/Γ((k+1)/2)"""
    half = 0.5 * (k + 1)
    return 2.0 * math.pi**half / math.gamma(half)


def ball_volume(k: int) -> float:
    """k 维单位球 B^k 的体积 π^(k/2)/Γ(k/2+1)"""
    return math.pi ** (0.5 * k) / math.gamma(0.5 * k + 1.0)


def prior_constant(fam: StructureFamily) -> float:
    """1/π²（n=1）或 2/π³（n=2）"""
    return 1.0 / math.pi**2 if fam.n == 1 else 2.0 / math.pi**3


def structure_constant(fam: StructureFamily) -> float:
    """C_n = n!/(√π·Γ(n+1/2))：C₁ = 2/π，C₂ = 8/(3π)"""
    return math.factorial(fam.n) / sqrt_pi_gamma_half(fam.n)


def _prior_values(fam: StructureFamily, r2: ArrayLike) -> ArrayLike:
    return prior_constant(fam) / np.sqrt(1.0 - r2)


def prior_pdf(fam: StructureFamily, p: BlochPoint) -> float:
    """
    归一化先验密度

    Raises:
        DomainExceededError: 点的维数与结构族不符
        BoundaryPointError: r ≥ 1
    """
    if p.dim != fam.d:
        raise DomainExceededError(
            f"family n={fam.n} lives on the {fam.d}-ball, got a {p.dim}-dimensional point",
            argument="p",
            value=p.coords,
        )
    r = p.radius
    if r >= 1.0:
        raise BoundaryPointError(f"prior density is singular at radius {r}", radius=r)
    return float(_prior_values(fam, r * r))


def _check_z(z: ArrayLike) -> np.ndarray:
    values = np.asarray(z, dtype=float)
    if not np.all(np.abs(values) <= 1.0):
        raise DomainExceededError("z must satisfy |z| <= 1", argument="z", value=z)
    return values


def structure_function(fam: StructureFamily, z: ArrayLike) -> ArrayLike:
    """结构函数 C_n·(1-z²)^(n-1/2)，z 可为标量或数组；关于 z 严格偶"""
    values = _check_z(z)
    result = structure_constant(fam) * (1.0 - values * values) ** (fam.n - 0.5)
    return float(result) if np.ndim(z) == 0 else result


def structure_cdf(fam: StructureFamily, z: ArrayLike) -> ArrayLike:
    """
    结构函数的累积分布函数

    φ = arcsin z：
        n=1:  (z·√(1-z²) + φ)/π + 1/2
        n=2:  φ/π + 2·sin 2φ/(3π) + sin 4φ/(12π) + 1/2
    """
    values = _check_z(z)
    phi = np.arcsin(values)
    if fam.n == 1:
        result = (values * np.sqrt(1.0 - values * values) + phi) / math.pi + 0.5
    else:
        result = phi / math.pi + 2.0 * np.sin(2.0 * phi) / (3.0 * math.pi) + np.sin(4.0 * phi) / (12.0 * math.pi) + 0.5
    return float(result) if np.ndim(z) == 0 else result
