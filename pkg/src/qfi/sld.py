"""
QThermo-Py 对称对数导数（SLD）与数值 QFI

在 ρ 的本征基下求解 ρL + Lρ = 2∂ρ：

    L_ab = 2·(∂ρ)_ab / (λ_a + λ_b)

再由 H_ab = ½·Tr[ρ(L_a L_b + L_b L_a)] 组装 QFI。
"""

from typing import List, Sequence

import numpy as np

from ..core.exceptions import SingularStateError
from ..state_space import BlochPoint, HermitianMatrix, density_derivatives, density_matrix
from ..utils.logger import get_logger
from .closed_form import require_interior
from .models import QFIMatrix

logger = get_logger(__name__)

SINGULAR_PAIR_SUM = 1e-12


def sld_solve(rho: HermitianMatrix, drho: HermitianMatrix) -> HermitianMatrix:
    """
    求解 ρL + Lρ = 2·∂ρ

    Args:
        rho: 内点密度矩阵
        drho: 与 rho 同维的 Hermitian 导数

    Returns:
        Hermitian 的 SLD 算符 L

    Raises:
        SingularStateError: 某对本征值之和 < 1e-12
    """
    eigenvalues, vectors = np.linalg.eigh(rho.entries)
    pair_sums = eigenvalues[:, None] + eigenvalues[None, :]
    min_pair_sum = float(pair_sums.min())
    if min_pair_sum < SINGULAR_PAIR_SUM:
        raise SingularStateError(
            f"density matrix has eigenvalue pair sum {min_pair_sum:.3e} below {SINGULAR_PAIR_SUM}",
            min_pair_sum=min_pair_sum,
        )

    rotated = vectors.conj().T @ drho.entries @ vectors
    sld = vectors @ (2.0 * rotated / pair_sums) @ vectors.conj().T
    return HermitianMatrix(entries=0.5 * (sld + sld.conj().T))


def qfi_from_slds(rho: HermitianMatrix, slds: Sequence[HermitianMatrix]) -> np.ndarray:
    """H_ab = ½·Tr[ρ(L_a L_b + L_b L_a)]，取实部"""
    k = len(slds)
    h = np.empty((k, k))
    for a in range(k):
        for b in range(a, k):
            anticommutator = slds[a].entries @ slds[b].entries + slds[b].entries @ slds[a].entries
            h[a, b] = h[b, a] = 0.5 * float(np.trace(rho.entries @ anticommutator).real)
    return h


def qfi_numeric(p: BlochPoint) -> QFIMatrix:
    """经 SLD 数值计算 QFI；∂ρ 取自仿射参数化，不做有限差分"""
    require_interior(p)
    rho = density_matrix(p)
    slds: List[HermitianMatrix] = [sld_solve(rho, drho) for drho in density_derivatives(p.dim)]
    entries = qfi_from_slds(rho, slds)
    logger.debug("数值 QFI 完成", dim=p.dim, radius=p.radius)
    return QFIMatrix(entries=entries, at=p)
