"""
QThermo-Py 测试公共夹具
"""

import logging

import numpy as np
import pytest

from src.core.settings import reset_settings
from src.quadrature import QuadratureSpec
from src.state_space import BlochPoint


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """每个用例前后丢弃缓存的设置，避免环境变量串扰"""
    for name in (
        "QTHERMO_TOLERANCE",
        "QTHERMO_REL_TOL",
        "QTHERMO_MAX_SUBDIVISIONS",
        "QTHERMO_BASE_RULE_ORDER",
        "QTHERMO_DEFAULT_SEED",
        "QTHERMO_LOG_LEVEL",
        "QTHERMO_LOG_FORMAT",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def detached_log_handlers():
    """命令行用例会把处理器绑到 capsys 的 stderr 上，用例结束后卸下"""
    yield
    logging.getLogger("qthermo").handlers.clear()


@pytest.fixture
def tight_spec() -> QuadratureSpec:
    return QuadratureSpec(abs_tol=1e-13, rel_tol=1e-12, max_subdivisions=400)


def random_interior_points(dim: int, count: int, seed: int, max_radius: float = 0.95):
    """球内均匀方向、半径在 [0, max_radius) 的随机点"""
    rng = np.random.default_rng(seed)
    directions = rng.standard_normal((count, dim))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = max_radius * rng.uniform(0.0, 1.0, size=count)
    return [BlochPoint.of(r * v) for r, v in zip(radii, directions)]


@pytest.fixture
def interior_points():
    return random_interior_points
