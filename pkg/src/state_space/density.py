"""
QThermo-Py 密度矩阵构造

复情形（d=3）：

    ρ = ½ [[1+z, x-iy], [x+iy, 1-z]]

四元数情形（d=5）：2×2 四元数矩阵 ½[[1+z, conj(q)], [q, 1-z]]，
q = x + y·i + u·j + v·k，逐元素经 Φ 嵌入成 4×4 复矩阵后再除以 2 使迹为 1。
本征值为 (1±r)/4，各二重简并。
"""

from typing import Callable, Dict, List

import numpy as np

from ..core.exceptions import DomainExceededError, RadiusExceededError
from .models import BlochPoint, HermitianMatrix
from .quaternion import Quaternion, quat_to_complex


def _complex_entries(coords: np.ndarray) -> np.ndarray:
    x, y, z = coords
    return 0.5 * np.array(
        [[1.0 + z, complex(x, -y)], [complex(x, y), 1.0 - z]],
        dtype=complex,
    )


def _quaternionic_entries(coords: np.ndarray) -> np.ndarray:
    u, v, x, y, z = coords
    block = quat_to_complex(Quaternion(w=x, x=y, y=u, z=v))
    identity = np.eye(2, dtype=complex)
    return 0.25 * np.block([
        [(1.0 + z) * identity, block.conj().T],
        [block, (1.0 - z) * identity],
    ])


_BUILDERS: Dict[int, Callable[[np.ndarray], np.ndarray]] = {
    3: _complex_entries,
    5: _quaternionic_entries,
}


def _checked(p: BlochPoint, dim: int) -> np.ndarray:
    if p.dim != dim:
        raise DomainExceededError(f"expected a {dim}-dimensional Bloch vector, got {p.dim}", argument="p", value=p.coords)
    r = p.radius
    if r > 1.0:
        raise RadiusExceededError(f"Bloch vector radius {r} exceeds 1", radius=r)
    return p.as_array()


def density_complex(p: BlochPoint) -> HermitianMatrix:
    """2×2 复密度矩阵，迹 1，本征值 (1±r)/2"""
    return HermitianMatrix(entries=_complex_entries(_checked(p, 3)))


def density_quaternionic(p: BlochPoint) -> HermitianMatrix:
    """4×4 复嵌入的四元数密度矩阵，迹 1，本征值 (1±r)/4 各二重"""
    return HermitianMatrix(entries=_quaternionic_entries(_checked(p, 5)))


def density_matrix(p: BlochPoint) -> HermitianMatrix:
    """按维数分派到复或四元数构造"""
    if p.dim == 3:
        return density_complex(p)
    return density_quaternionic(p)


def density_derivatives(dim: int) -> List[HermitianMatrix]:
    """
    ∂ρ/∂θ_a，a 按坐标顺序

    参数化是仿射的，导数与点无关，等于 ρ(e_a) - ρ(0)。
    """
    if dim not in _BUILDERS:
        raise DomainExceededError(f"no density parameterization in dimension {dim}", argument="dim", value=dim)
    build = _BUILDERS[dim]
    origin = build(np.zeros(dim))
    return [HermitianMatrix(entries=build(np.eye(dim)[a]) - origin) for a in range(dim)]


def hermitian_eigenvalues(matrix: HermitianMatrix) -> np.ndarray:
    """升序本征值（LAPACK eigvalsh）"""
    return matrix.eigenvalues()
