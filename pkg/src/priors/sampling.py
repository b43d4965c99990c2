"""
QThermo-Py 先验采样

方向取归一化的高斯向量（球面上均匀）；半径 r = sin θ，θ 在 [0, π/2] 上的
密度 ∝ sin^{d-1} θ，用均匀提议分布做拒绝采样（上界 1）。
随机数使用 numpy PCG64，给定 (family, count, seed) 时结果逐位可复现。
"""

import math
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..core.exceptions import DomainExceededError
from ..core.settings import get_settings
from ..utils.logger import get_logger
from ..utils.tables import Table, emit_table
from .models import SampleBatch, StructureFamily

logger = get_logger(__name__)

MIN_CHUNK = 1024


def make_generator(seed: int) -> np.random.Generator:
    """按设置中固定的比特生成器构造 Generator"""
    algorithm = get_settings().rng_algorithm
    bit_generator = getattr(np.random, algorithm)(seed)
    return np.random.Generator(bit_generator)


def _draw_angles(rng: np.random.Generator, count: int, power: int) -> np.ndarray:
    accepted = []
    remaining = count
    proposed = 0
    while remaining > 0:
        chunk = max(2 * remaining, MIN_CHUNK)
        theta = rng.uniform(0.0, 0.5 * math.pi, size=chunk)
        u = rng.uniform(0.0, 1.0, size=chunk)
        keep = theta[u < np.sin(theta) ** power]
        accepted.append(keep[:remaining])
        remaining -= min(remaining, keep.size)
        proposed += chunk
    logger.debug("拒绝采样完成", count=count, proposed=proposed, acceptance=count / proposed)
    return np.concatenate(accepted)


def sample_prior(fam: StructureFamily, count: int, seed: Optional[int] = None) -> SampleBatch:
    """
    从归一化先验中抽样

    Args:
        fam: 结构族
        count: 样本数，≥ 1
        seed: 64 位种子，缺省取设置中的默认种子

    Returns:
        SampleBatch
    """
    if count < 1:
        raise DomainExceededError(f"sample count must be >= 1, got {count}", argument="count", value=count)
    if seed is None:
        seed = get_settings().default_seed

    rng = make_generator(seed)
    radii = np.sin(_draw_angles(rng, count, fam.d - 1))
    directions = rng.standard_normal((count, fam.d))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    return SampleBatch(family=fam, coords=radii[:, None] * directions, seed=seed)


def samples_table(batch: SampleBatch) -> Table:
    """列：index，然后按坐标顺序的 d 个坐标"""
    rows = [[i, *row] for i, row in enumerate(batch.coords.tolist())]
    return Table(columns=["index", *batch.family.coordinate_names], rows=rows)


def write_samples_csv(batch: SampleBatch, path: Optional[Union[str, Path]] = None) -> None:
    emit_table(samples_table(batch), "csv", path)
