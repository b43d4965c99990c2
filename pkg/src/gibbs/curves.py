"""
QThermo-Py β 曲线

在 β 网格上逐点求值某个物理量；输出顺序与输入网格一致。
"""

from typing import Callable, Dict, Optional, Sequence

import numpy as np

from ..core.exceptions import DomainExceededError
from ..quadrature import QuadratureSpec
from ..utils.logger import get_logger
from .models import FISHER_MAX_ABS_BETA, GibbsParams, ThermoCurve, ThermoQuantity
from .moments import fisher_beta, jeffreys_beta, mean_z, relative_entropy, variance_z

logger = get_logger(__name__)

GRID_DECIMALS = 12

QUANTITY_FUNCTIONS: Dict[ThermoQuantity, Callable[[GibbsParams, Optional[QuadratureSpec]], float]] = {
    ThermoQuantity.MEAN: mean_z,
    ThermoQuantity.VARIANCE: variance_z,
    ThermoQuantity.RELATIVE_ENTROPY: relative_entropy,
    ThermoQuantity.FISHER: fisher_beta,
    ThermoQuantity.JEFFREYS: jeffreys_beta,
}


def uniform_grid(start: float, stop: float, step: float) -> np.ndarray:
    """
    [start, stop] 上步长为 step 的网格，端点都包含

    节点由 linspace 生成再舍入到 12 位小数，使 -10 + k·0.1 这类节点没有
    累积误差，同时消去 -0.0。

    Raises:
        DomainExceededError: step ≤ 0、stop < start 或区间不是 step 的整数倍
    """
    if not step > 0.0:
        raise DomainExceededError(f"grid step must be > 0, got {step}", argument="step", value=step)
    if stop < start:
        raise DomainExceededError(f"grid bounds out of order: [{start}, {stop}]", argument="bounds")
    intervals = (stop - start) / step
    count = int(round(intervals))
    if abs(intervals - count) > 1e-9 * max(1.0, intervals):
        raise DomainExceededError(
            f"interval [{start}, {stop}] is not a whole number of steps of {step}",
            argument="step",
            value=step,
        )
    return np.round(np.linspace(start, stop, count + 1), GRID_DECIMALS) + 0.0


def evaluate(quantity: ThermoQuantity, gp: GibbsParams, spec: Optional[QuadratureSpec] = None) -> float:
    return QUANTITY_FUNCTIONS[ThermoQuantity(quantity)](gp, spec)


def sweep(
    quantity: ThermoQuantity,
    n: int,
    beta_grid: Sequence[float],
    spec: Optional[QuadratureSpec] = None,
) -> ThermoCurve:
    """
    在 β 网格上逐点求值

    Args:
        quantity: 物理量
        n: 结构族指数
        beta_grid: 严格递增，|β| ≤ 100
        spec: 积分规格

    Returns:
        ThermoCurve
    """
    quantity = ThermoQuantity(quantity)
    grid = [float(b) for b in beta_grid]
    if not grid:
        raise DomainExceededError("beta grid is empty", argument="beta_grid")
    if any(b >= a for a, b in zip(grid[1:], grid[:-1])):
        raise DomainExceededError("beta grid must be strictly increasing", argument="beta_grid")
    if max(abs(grid[0]), abs(grid[-1])) > FISHER_MAX_ABS_BETA:
        raise DomainExceededError(
            f"sweeps are limited to |beta| <= {FISHER_MAX_ABS_BETA}",
            argument="beta_grid",
            value=(grid[0], grid[-1]),
        )

    function = QUANTITY_FUNCTIONS[quantity]
    values = [function(GibbsParams(n=n, beta=b), spec) for b in grid]
    logger.debug("扫描完成", quantity=quantity.value, n=n, points=len(grid))
    return ThermoCurve(quantity=quantity, n=n, beta_grid=tuple(grid), values=tuple(values))


def total_variation(curve: ThermoCurve) -> float:
    """Σ|v_{k+1} - v_k|"""
    return float(np.sum(np.abs(np.diff(curve.values))))
