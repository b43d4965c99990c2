"""
QThermo-Py Gibbs 分布的统计量

Gibbs 族是以 -z 为充分统计量的指数族，log Z_n(β) 的导数给出各阶矩：

    ⟨z⟩       = -d log Z/dβ   = -(β/2)·Î_{n+1}/Î_n
    Var(z)    =  d² log Z/dβ² = ½·R₁ + (β²/4)·(R₂ - R₁²)

其中 R₁ = Î_{n+1}/Î_n，R₂ = Î_{n+2}/Î_n，用到 dÎ_n/dβ = (β/2)·Î_{n+1}。
β 上的 Fisher 信息等于 Var(z)，其平方根是 β 上未归一化的 Jeffreys 先验。
"""

import math
from typing import Optional

import numpy as np
from scipy.special import digamma

from ..core.exceptions import DomainExceededError
from ..quadrature import QuadratureSpec, integrate_gegenbauer
from ..special import bessel_i_reduced
from ..utils.logger import get_logger
from .distribution import partition_reduced
from .models import FISHER_MAX_ABS_BETA, GibbsParams

logger = get_logger(__name__)

LOG_UNIFORM_DENSITY_INV = math.log(2.0)
DEFAULT_FD_STEP = 1e-4


def _bessel_ratios(gp: GibbsParams, spec: Optional[QuadratureSpec]) -> tuple:
    base = bessel_i_reduced(gp.n, gp.beta, spec)
    r1 = bessel_i_reduced(gp.n + 1, gp.beta, spec) / base
    r2 = bessel_i_reduced(gp.n + 2, gp.beta, spec) / base
    return r1, r2


def mean_z(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """⟨z⟩ = -(β/2)·Î_{n+1}(β)/Î_n(β)；关于 β 奇，严格递减"""
    base = bessel_i_reduced(gp.n, gp.beta, spec)
    return -0.5 * gp.beta * bessel_i_reduced(gp.n + 1, gp.beta, spec) / base


def _tilted(gp: GibbsParams, spec: Optional[QuadratureSpec]):
    inv_z = 1.0 / partition_reduced(gp, spec)
    beta = gp.beta
    return lambda z: np.exp(-beta * z) * inv_z


def expected_z_quadrature(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """直接积分得到的 E[z]，用于与 Bessel 比值互相校验"""
    weight = _tilted(gp, spec)
    return integrate_gegenbauer(lambda z: z * weight(z), gp.n, spec, vectorized=True)


def variance_z(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """Var(z)，按中心二阶矩 E[(z - ⟨z⟩)²] 积分"""
    weight = _tilted(gp, spec)
    mean = mean_z(gp, spec)
    return integrate_gegenbauer(lambda z: (z - mean) ** 2 * weight(z), gp.n, spec, vectorized=True)


def relative_entropy(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """
    相对 [-1, 1] 上均匀密度 1/2 的 KL 散度（nats）

    D = ∫ p·log(2p) dz，p = 0 处被积函数取 0。
    """
    beta = gp.beta
    log_z = math.log(partition_reduced(gp, spec))
    weight = _tilted(gp, spec)
    exponent = gp.n - 0.5

    def g(z):
        w = 1.0 - z * z
        positive = w > 0.0
        log_p = -beta * z + exponent * np.log(np.where(positive, w, 1.0)) - log_z
        return np.where(positive, weight(z) * (LOG_UNIFORM_DENSITY_INV + log_p), 0.0)

    return integrate_gegenbauer(g, gp.n, spec, vectorized=True)


def relative_entropy_closed_form_at_zero(n: int) -> float:
    """
    β = 0 时的相对熵闭式

    (1+z)/2 服从 Beta(n+1/2, n+1/2)，于是
    E[log(1-z²)] = log 4 + 2·(ψ(n+1/2) - ψ(2n+1))。
    n=1 给出 ln 2 - ln π + 1/2，n=2 给出 ln(16/(3π)) + 7/4 - 3·ln 2。
    """
    if n < 1:
        raise DomainExceededError(f"structure index must be >= 1, got {n}", argument="n", value=n)
    # log C_n = log n! - log(√π·Γ(n+1/2))
    log_c = math.lgamma(n + 1) - math.lgamma(n + 0.5) - 0.5 * math.log(math.pi)
    expected_log = math.log(4.0) + 2.0 * float(digamma(n + 0.5) - digamma(2 * n + 1))
    return LOG_UNIFORM_DENSITY_INV + log_c + (n - 0.5) * expected_log


def _check_fisher_range(gp: GibbsParams) -> None:
    if abs(gp.beta) > FISHER_MAX_ABS_BETA:
        raise DomainExceededError(
            f"Fisher information is evaluated for |beta| <= {FISHER_MAX_ABS_BETA}, got {gp.beta}",
            argument="beta",
            value=gp.beta,
        )


def fisher_beta(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """β 上的 Fisher 信息 d² log Î_n/dβ²，等于 Var(z)"""
    _check_fisher_range(gp)
    r1, r2 = _bessel_ratios(gp, spec)
    return 0.5 * r1 + 0.25 * gp.beta * gp.beta * (r2 - r1 * r1)


def fisher_beta_finite_difference(
    gp: GibbsParams,
    step: float = DEFAULT_FD_STEP,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """诊断用：对 d log Z/dβ = -⟨z⟩ 做中心差分"""
    _check_fisher_range(gp)
    ahead = mean_z(GibbsParams(n=gp.n, beta=gp.beta + step), spec)
    behind = mean_z(GibbsParams(n=gp.n, beta=gp.beta - step), spec)
    return -(ahead - behind) / (2.0 * step)


def jeffreys_beta(gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    """√Fisher：β 上未归一化的 Jeffreys 先验"""
    return math.sqrt(fisher_beta(gp, spec))
