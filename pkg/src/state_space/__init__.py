"""
QThermo-Py State Space 模块

四元数代数、四元数到复矩阵的嵌入，以及复（2×2）与四元数（4×4 复嵌入）
两能级密度矩阵的构造。
"""

from .quaternion import (
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    Quaternion,
    quat_mul,
    quat_to_complex,
)
from .models import (
    BOUNDARY_EPSILON,
    COORDINATE_NAMES,
    HERMITIAN_ATOL,
    BlochPoint,
    HermitianMatrix,
)
from .density import (
    density_complex,
    density_derivatives,
    density_matrix,
    density_quaternionic,
    hermitian_eigenvalues,
)

__all__ = [
    "ONE",
    "UNIT_I",
    "UNIT_J",
    "UNIT_K",
    "Quaternion",
    "quat_mul",
    "quat_to_complex",
    "BOUNDARY_EPSILON",
    "COORDINATE_NAMES",
    "HERMITIAN_ATOL",
    "BlochPoint",
    "HermitianMatrix",
    "density_complex",
    "density_derivatives",
    "density_matrix",
    "density_quaternionic",
    "hermitian_eigenvalues",
]
