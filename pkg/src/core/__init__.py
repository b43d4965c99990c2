"""
QThermo-Py Core Package

各数值模块共享的基础设施：
- exceptions: 异常层次
- limits: |β| 上限
- settings: 进程级设置（环境变量 / .env）
"""

from .exceptions import (
    QThermoError,
    QThermoDomainError,
    QThermoNumericalError,
    RadiusExceededError,
    BoundaryPointError,
    DomainExceededError,
    ConfigurationError,
    SingularStateError,
    ToleranceNotReachedError,
    BesselOverflowError,
    ConsistencyError,
    EmissionError,
)
from .limits import FISHER_MAX_ABS_BETA, POISSON_MAX_ABS_BETA
from .settings import QThermoSettings, get_settings, reset_settings

__all__ = [
    # 异常
    "QThermoError",
    "QThermoDomainError",
    "QThermoNumericalError",
    "RadiusExceededError",
    "BoundaryPointError",
    "DomainExceededError",
    "ConfigurationError",
    "SingularStateError",
    "ToleranceNotReachedError",
    "BesselOverflowError",
    "ConsistencyError",
    "EmissionError",
    # 定义域上限
    "FISHER_MAX_ABS_BETA",
    "POISSON_MAX_ABS_BETA",
    # 设置
    "QThermoSettings",
    "get_settings",
    "reset_settings",
]
