"""
QThermo-Py Quadrature 模块

一维定积分：
- 固定阶 Gauss-Legendre
- 带误差控制的全局自适应二分
- Gegenbauer 权重积分（sin 代换）
"""

from .config import (
    DEFAULT_ABS_TOL,
    DEFAULT_REL_TOL,
    DEFAULT_MAX_SUBDIVISIONS,
    DEFAULT_BASE_RULE_ORDER,
    QuadratureSpec,
    resolve_spec,
)
from .gauss_legendre import (
    gauss_legendre,
    integrate,
    integrate_gegenbauer,
    legendre_rule,
)

__all__ = [
    "DEFAULT_ABS_TOL",
    "DEFAULT_REL_TOL",
    "DEFAULT_MAX_SUBDIVISIONS",
    "DEFAULT_BASE_RULE_ORDER",
    "QuadratureSpec",
    "resolve_spec",
    "gauss_legendre",
    "integrate",
    "integrate_gegenbauer",
    "legendre_rule",
]
