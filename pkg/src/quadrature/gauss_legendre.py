"""
QThermo-Py 自适应 Gauss-Legendre 积分

- 固定阶 Gauss-Legendre 规则
- 全局自适应二分：每次拆分误差估计最大的面板
- Gegenbauer 权重 (1-z²)^(n-1/2) 通过 z = sin θ 代换消去端点奇异性
"""

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Callable, Optional, Tuple

import numpy as np

from ..core.exceptions import DomainExceededError, ToleranceNotReachedError
from ..utils.logger import get_logger
from .config import QuadratureSpec, resolve_spec

logger = get_logger(__name__)

Integrand = Callable[[float], float]


@lru_cache(maxsize=16)
def legendre_rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """[-1, 1] 上 order 点 Gauss-Legendre 节点与权重（只读缓存）"""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _evaluate(f: Callable, x: np.ndarray, vectorized: bool) -> np.ndarray:
    if vectorized:
        values = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    else:
        values = np.fromiter((f(float(t)) for t in x), dtype=float, count=x.size)
    if not np.all(np.isfinite(values)):
        raise DomainExceededError("integrand returned a non-finite value", argument="f")
    return values


def gauss_legendre(
    f: Integrand,
    a: float,
    b: float,
    order: int = 20,
    vectorized: bool = False,
) -> float:
    """
    固定阶 Gauss-Legendre 积分，对次数 ≤ 2·order-1 的多项式精确

    Args:
        f: 被积函数
        a: 下限
        b: 上限
        order: 节点数
        vectorized: f 是否接受 numpy 数组

    Returns:
        积分近似值
    """
    nodes, weights = legendre_rule(order)
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * nodes
    return float(half * np.dot(weights, _evaluate(f, x, vectorized)))


@dataclass(frozen=True)
class _Panel:
    a: float
    b: float
    left: float
    right: float
    err: float

    @property
    def value(self) -> float:
        return self.left + self.right

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)


def _make_panel(rule: Callable[[float, float], float], a: float, b: float, coarse: float) -> _Panel:
    m = 0.5 * (a + b)
    left = rule(a, m)
    right = rule(m, b)
    return _Panel(a=a, b=b, left=left, right=right, err=abs(left + right - coarse))


def integrate(
    f: Integrand,
    a: float,
    b: float,
    spec: Optional[QuadratureSpec] = None,
    *,
    vectorized: bool = False,
) -> Tuple[float, float]:
    """
    自适应定积分

    每个面板的误差估计为整体规则与两半规则之差；总误差不超过
    max(abs_tol, rel_tol·|value|) 时停止。

    Args:
        f: 被积函数，在 (a, b) 内有限
        a: 下限
        b: 上限，须大于 a
        spec: 积分规格，缺省取设置中的默认值
        vectorized: f 是否接受 numpy 数组

    Returns:
        (value, err_est)

    Raises:
        DomainExceededError: a >= b 或被积函数非有限
        ToleranceNotReachedError: 细分次数用尽仍未达到容差
    """
    spec = resolve_spec(spec)
    if not a < b:
        raise DomainExceededError(f"integration bounds must satisfy a < b, got [{a}, {b}]", argument="bounds")

    rule = partial(gauss_legendre, f, order=spec.base_rule_order, vectorized=vectorized)
    first = _make_panel(rule, a, b, coarse=rule(a, b))
    heap = [(-first.err, 0, first)]
    counter = 1
    subdivisions = 0

    while True:
        value = math.fsum(panel.value for _, _, panel in heap)
        err_est = math.fsum(panel.err for _, _, panel in heap)
        if err_est <= spec.tolerance_for(value):
            break
        if subdivisions >= spec.max_subdivisions:
            raise ToleranceNotReachedError(
                f"adaptive quadrature on [{a}, {b}] stopped at err_est={err_est:.3e} "
                f"after {subdivisions} subdivisions",
                value=value,
                err_est=err_est,
                subdivisions=subdivisions,
            )
        _, _, worst = heapq.heappop(heap)
        mid = worst.midpoint
        for child in (
            _make_panel(rule, worst.a, mid, coarse=worst.left),
            _make_panel(rule, mid, worst.b, coarse=worst.right),
        ):
            heapq.heappush(heap, (-child.err, counter, child))
            counter += 1
        subdivisions += 1

    logger.debug("积分完成", a=a, b=b, value=value, err_est=err_est, subdivisions=subdivisions)
    return value, err_est


def integrate_gegenbauer(
    g: Integrand,
    n: int,
    spec: Optional[QuadratureSpec] = None,
    *,
    vectorized: bool = False,
) -> float:
    """
    计算 ∫_{-1}^{1} g(z)·(1-z²)^(n-1/2) dz

    代换 z = sin θ 后变为 ∫_{-π/2}^{π/2} g(sin θ)·cos^(2n) θ dθ，端点处不再有
    导数发散。

    Args:
        g: [-1, 1] 上的光滑函数
        n: 权重指数，n ≥ 0
        spec: 积分规格
        vectorized: g 是否接受 numpy 数组

    Returns:
        积分值
    """
    if n < 0:
        raise DomainExceededError(f"Gegenbauer weight index must be >= 0, got {n}", argument="n", value=n)

    power = 2 * n
    if vectorized:
        def integrand(theta):
            return g(np.sin(theta)) * np.cos(theta) ** power
    else:
        def integrand(theta):
            return g(math.sin(theta)) * math.cos(theta) ** power

    value, _ = integrate(integrand, -0.5 * math.pi, 0.5 * math.pi, spec, vectorized=vectorized)
    return value
