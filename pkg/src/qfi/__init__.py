"""
QThermo-Py QFI 模块

量子 Fisher 信息：闭式矩阵与行列式、基于 SLD 的独立数值计算，以及两者的
一致性检查。
"""

from .models import QFIComparison, QFIMatrix
from .closed_form import qfi_closed_form, qfi_determinant, require_interior
from .sld import SINGULAR_PAIR_SUM, qfi_from_slds, qfi_numeric, sld_solve
from .checks import compare_qfi, is_positive_definite, qfi_batch

__all__ = [
    "QFIComparison",
    "QFIMatrix",
    "qfi_closed_form",
    "qfi_determinant",
    "require_interior",
    "SINGULAR_PAIR_SUM",
    "qfi_from_slds",
    "qfi_numeric",
    "sld_solve",
    "compare_qfi",
    "is_positive_definite",
    "qfi_batch",
]
