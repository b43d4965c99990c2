"""
QThermo-Py 先验的积分检查

多维积分都化成一维：
- 总质量：径向约化 Surf(S^{d-1})·∫₀¹ r^{d-1}/√(1-r²) dr，r = sin θ
- 沿最后一个坐标的边缘：t = a·sin θ，a = √(1-|s|²)
- 到 z 的边缘：对半径 a = √(1-z²) 的 (d-1) 维球径向积分
"""

import math
from typing import Optional, Sequence

import numpy as np

from ..core.exceptions import DomainExceededError
from ..quadrature import QuadratureSpec, integrate
from ..utils.logger import get_logger
from .density import _prior_values, ball_volume, prior_constant, sphere_surface
from .models import MarginalReport, NormalizationReport, StructureFamily

logger = get_logger(__name__)

HALF_PI = 0.5 * math.pi

DEFAULT_MARGINAL_POINTS = {
    1: [
        [0.0, 0.0],
        [0.5, 0.5],
        [0.3, -0.2],
        [-0.6, 0.1],
        [0.1, 0.9],
    ],
    2: [
        [0.0, 0.0, 0.0, 0.0],
        [0.7, 0.0, 0.0, 0.0],
        [0.35, 0.35, 0.35, 0.35],
        [-0.2, 0.4, 0.1, -0.5],
        [0.5, -0.5, 0.5, -0.3],
    ],
}


def normalization_report(fam: StructureFamily, spec: Optional[QuadratureSpec] = None) -> NormalizationReport:
    power = fam.d - 1
    radial, err = integrate(lambda theta: np.sin(theta) ** power, 0.0, HALF_PI, spec, vectorized=True)
    surface = sphere_surface(fam.d - 1)
    unnormalized = surface * radial
    mass = prior_constant(fam) * unnormalized
    logger.debug("先验归一化检查", n=fam.n, mass=mass, err_est=err)
    return NormalizationReport(
        n=fam.n,
        mass=mass,
        err_est=prior_constant(fam) * surface * err,
        unnormalized_mass=unnormalized,
    )


def prior_normalization_check(fam: StructureFamily, spec: Optional[QuadratureSpec] = None) -> float:
    """先验总质量，应为 1"""
    return normalization_report(fam, spec).mass


def _last_coordinate_marginal(fam: StructureFamily, sub_point: np.ndarray, spec: Optional[QuadratureSpec]) -> float:
    s2 = float(np.dot(sub_point, sub_point))
    a = math.sqrt(1.0 - s2)

    def integrand(theta):
        t = a * np.sin(theta)
        return _prior_values(fam, s2 + t * t) * a * np.cos(theta)

    value, _ = integrate(integrand, -HALF_PI, HALF_PI, spec, vectorized=True)
    return value


def marginal_check(
    fam: StructureFamily,
    spec: Optional[QuadratureSpec] = None,
    sub_points: Optional[Sequence[Sequence[float]]] = None,
) -> MarginalReport:
    """
    检查先验沿最后一个坐标积分后是否在 (d-1) 维单位球上均匀

    期望常数为 1/Vol(B^{d-1})：n=1 时 1/π，n=2 时 2/π²。
    """
    points = [list(map(float, s)) for s in (sub_points or DEFAULT_MARGINAL_POINTS[fam.n])]
    values = []
    for s in points:
        array = np.asarray(s, dtype=float)
        if array.shape != (fam.d - 1,):
            raise DomainExceededError(
                f"marginal sub-points for n={fam.n} must have {fam.d - 1} coordinates",
                argument="sub_points",
                value=s,
            )
        if not np.linalg.norm(array) < 1.0:
            raise DomainExceededError("marginal sub-points must lie inside the unit ball", argument="sub_points", value=s)
        values.append(_last_coordinate_marginal(fam, array, spec))

    expected = 1.0 / ball_volume(fam.d - 1)
    return MarginalReport(
        n=fam.n,
        expected=expected,
        sub_points=points,
        values=values,
        max_deviation=max(abs(v - expected) for v in values),
    )


def marginal_density(fam: StructureFamily, z: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    数值地把先验边缘化到 z，应逐点重现结构函数

    对剩余坐标在半径 a = √(1-z²) 的 (d-1) 维球上做径向积分，s = a·sin θ。
    """
    if not abs(z) <= 1.0:
        raise DomainExceededError("z must satisfy |z| <= 1", argument="z", value=z)
    a = math.sqrt(max(1.0 - z * z, 0.0))
    if a == 0.0:
        return 0.0

    k = fam.d - 2
    surface = sphere_surface(k)

    def integrand(theta):
        s = a * np.sin(theta)
        return _prior_values(fam, z * z + s * s) * surface * s**k * a * np.cos(theta)

    value, _ = integrate(integrand, 0.0, HALF_PI, spec, vectorized=True)
    return value
