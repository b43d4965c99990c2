"""
QThermo-Py JSON 处理工具模块

- 读取配置文件时的容错解析（json_repair 修复轻微格式错误）
- 结果与清单的确定性序列化（numpy 标量、pydantic 模型、枚举）
"""

import json
from enum import Enum
from typing import Any, Optional

import json_repair
import numpy as np
from pydantic import BaseModel

from .logger import get_logger

logger = get_logger(__name__)


def safe_json_loads(content: str, default: Any = None, repair: bool = True) -> Any:
    """
    安全的 JSON 解析

    Args:
        content: JSON 字符串
        default: 解析失败时的返回值
        repair: 是否尝试用 json_repair 修复

    Returns:
        解析结果，失败时返回 default
    """
    if not content or not isinstance(content, str) or not content.strip():
        logger.debug("空的 JSON 内容")
        return default

    try:
        return json.loads(content)
    except (json.JSONDecodeError, ValueError) as e:
        logger.debug("JSON 解析失败", error=str(e))
        if not repair:
            return default

    try:
        repaired = json_repair.loads(content)
    except Exception as e:
        logger.warning("JSON 修复失败", error=str(e))
        return default
    if not isinstance(repaired, (dict, list)):
        return default
    logger.warning("JSON 内容经 json_repair 修复后解析")
    return repaired


def safe_json_dumps(obj: Any, indent: Optional[int] = None, sort_keys: bool = False) -> str:
    """
    确定性 JSON 序列化

    浮点数沿用 json 模块的最短往返表示；非有限值会被拒绝。

    Raises:
        ValueError: 对象中含 NaN / Inf
        TypeError: 对象不可序列化
    """
    return json.dumps(
        obj,
        ensure_ascii=False,
        indent=indent,
        sort_keys=sort_keys,
        allow_nan=False,
        default=_default_json_serializer,
    )


def _default_json_serializer(obj: Any) -> Any:
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"对象 {type(obj)} 不支持 JSON 序列化")
