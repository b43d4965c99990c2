"""
QThermo-Py QFI 一致性检查

- 闭式与数值 QFI 的逐点对照
- 点集批量对照（输出顺序与输入一致）
- 正定性（Cholesky）
"""

import math
from typing import Iterable, List

import numpy as np

from ..state_space import BlochPoint, density_matrix
from .closed_form import qfi_closed_form, qfi_determinant
from .models import QFIComparison, QFIMatrix
from .sld import qfi_numeric


def is_positive_definite(matrix: QFIMatrix) -> bool:
    try:
        np.linalg.cholesky(matrix.entries)
    except np.linalg.LinAlgError:
        return False
    return True


def compare_qfi(p: BlochPoint) -> QFIComparison:
    """在一个内点上对照闭式与数值 QFI 及其行列式关系"""
    closed = qfi_closed_form(p)
    numeric = qfi_numeric(p)
    det_numeric = numeric.determinant()
    det_rho = density_matrix(p).determinant()
    # d=5 时谱二重简并，取平方根消去重数
    rho_factor = det_rho if p.dim == 3 else math.sqrt(max(det_rho, 0.0))

    return QFIComparison(
        point=p,
        closed_form=closed,
        numeric=numeric,
        max_deviation=float(np.max(np.abs(numeric.entries - closed.entries))),
        det_closed_form=qfi_determinant(p),
        det_numeric=det_numeric,
        density_determinant=det_rho,
        inverse_product=det_numeric * rho_factor,
    )


def qfi_batch(points: Iterable[BlochPoint]) -> List[QFIComparison]:
    return [compare_qfi(p) for p in points]
