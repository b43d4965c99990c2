"""
QThermo-Py 运行时设置

基于 pydantic-settings 的进程级设置，支持环境变量（前缀 QTHERMO_）与 .env 文件：
- QTHERMO_TOLERANCE 覆盖默认积分规格的 abs_tol
- 日志级别 / 格式
- 采样器固定的随机数算法与默认种子
"""

import threading
from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class QThermoSettings(BaseSettings):
    """进程级设置"""

    model_config = SettingsConfigDict(
        env_prefix="QTHERMO_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # 积分默认值
    tolerance: Optional[float] = Field(None, description="覆盖默认 abs_tol", gt=0.0)
    rel_tol: float = Field(1e-10, description="默认相对容差", gt=0.0)
    max_subdivisions: int = Field(200, description="默认最大细分次数", ge=1)
    base_rule_order: int = Field(20, description="Gauss-Legendre 基础面板阶数", ge=10, le=100)

    # 日志
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field("WARNING", description="日志级别")
    log_format: Literal["text", "json", "simple"] = Field("text", description="日志格式")

    # 采样器
    rng_algorithm: Literal["PCG64"] = Field("PCG64", description="numpy 比特生成器名称（固定）")
    default_seed: int = Field(20250101, description="默认采样种子", ge=0, lt=2**64)

    def quadrature_spec(self):
        """由当前设置构造默认积分规格"""
        from ..quadrature.config import DEFAULT_ABS_TOL, QuadratureSpec

        return QuadratureSpec(
            abs_tol=self.tolerance if self.tolerance is not None else DEFAULT_ABS_TOL,
            rel_tol=self.rel_tol,
            max_subdivisions=self.max_subdivisions,
            base_rule_order=self.base_rule_order,
        )


# 全局设置实例
_global_settings: Optional[QThermoSettings] = None
_settings_lock = threading.RLock()


def get_settings() -> QThermoSettings:
    """获取全局设置实例"""
    global _global_settings

    with _settings_lock:
        if _global_settings is None:
            _global_settings = QThermoSettings()
        return _global_settings


def reset_settings() -> None:
    """丢弃缓存的设置，下次访问时重新读取环境变量"""
    global _global_settings

    with _settings_lock:
        _global_settings = None
