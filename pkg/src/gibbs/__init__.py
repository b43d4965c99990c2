"""
QThermo-Py Gibbs 模块

结构函数的指数倾斜族及其热统计量：归一化、均值、方差、相对熵、β 上的
Fisher 信息与未归一化 Jeffreys 先验，以及 β 网格扫描。
"""

from .models import FISHER_MAX_ABS_BETA, GibbsParams, ThermoCurve, ThermoQuantity
from .distribution import gibbs_pdf, log_partition, partition_reduced
from .moments import (
    expected_z_quadrature,
    fisher_beta,
    fisher_beta_finite_difference,
    jeffreys_beta,
    mean_z,
    relative_entropy,
    relative_entropy_closed_form_at_zero,
    variance_z,
)
from .curves import QUANTITY_FUNCTIONS, evaluate, sweep, total_variation, uniform_grid

__all__ = [
    "FISHER_MAX_ABS_BETA",
    "GibbsParams",
    "ThermoCurve",
    "ThermoQuantity",
    "gibbs_pdf",
    "log_partition",
    "partition_reduced",
    "expected_z_quadrature",
    "fisher_beta",
    "fisher_beta_finite_difference",
    "jeffreys_beta",
    "mean_z",
    "relative_entropy",
    "relative_entropy_closed_form_at_zero",
    "variance_z",
    "QUANTITY_FUNCTIONS",
    "evaluate",
    "sweep",
    "total_variation",
    "uniform_grid",
]
