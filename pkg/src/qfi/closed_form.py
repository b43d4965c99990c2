"""
QThermo-Py QFI 闭式表达

对 d=3 与 d=5 两种情形，QFI 在内点 r 处为

    H = I + r·rᵀ / (1 - r²)

即前因子 1/(1-r²)，非对角元 a·b，对角元 1 - (r² - a²)。行列式为 1/(1-r²)。
"""

import numpy as np

from ..core.exceptions import BoundaryPointError
from ..state_space import BOUNDARY_EPSILON, BlochPoint
from .models import QFIMatrix


def require_interior(p: BlochPoint) -> float:
    """返回 1 - r²；点不在内部时抛出 BoundaryPointError"""
    if not p.is_interior(BOUNDARY_EPSILON):
        raise BoundaryPointError(
            f"point with radius {p.radius} is not interior (r must be < 1 - {BOUNDARY_EPSILON})",
            radius=p.radius,
        )
    return 1.0 - p.radius**2


def qfi_closed_form(p: BlochPoint) -> QFIMatrix:
    """闭式 QFI 矩阵"""
    g = require_interior(p)
    r = p.as_array()
    entries = (g * np.eye(p.dim) + np.outer(r, r)) / g
    return QFIMatrix(entries=entries, at=p)


def qfi_determinant(p: BlochPoint) -> float:
    """闭式行列式 1/(1-r²)"""
    return 1.0 / require_interior(p)
