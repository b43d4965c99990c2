"""
QThermo-Py 配置加载器模块

读取 --config 指定的运行配置文件（JSON 为主，也接受 YAML），
字符串值中的 ${VAR} / ${VAR:default} 按环境变量替换；多个来源按顺序深度合并。
"""

import os
import re
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml

from ..core.exceptions import ConfigurationError
from .json_utils import safe_json_loads
from .logger import get_logger

logger = get_logger(__name__)

# ${NAME} 或 ${NAME:default}；default 可为空
_ENV_PATTERN = re.compile(r"\$\{\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?::([^}]*))?\}")

YAML_SUFFIXES = (".yaml", ".yml")


def substitute_env(value: Any) -> Any:
    """递归替换字符串中的环境变量引用；未设置且无默认值时保留原文"""
    if isinstance(value, Mapping):
        return {key: substitute_env(item) for key, item in value.items()}
    if isinstance(value, list):
        return [substitute_env(item) for item in value]
    if not isinstance(value, str):
        return value

    def lookup(match: "re.Match[str]") -> str:
        name, default = match.group(1), match.group(2)
        if name in os.environ:
            return os.environ[name]
        return default.strip() if default is not None else match.group(0)

    return _ENV_PATTERN.sub(lookup, value)


def merge_configs(*configs: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    """
    深度合并多个配置，后者覆盖前者；None 被跳过

    两侧同为字典的键递归合并，其余直接覆盖（列表不拼接）。
    """
    merged: Dict[str, Any] = {}
    for config in configs:
        if not config:
            continue
        for key, value in config.items():
            current = merged.get(key)
            if isinstance(current, Mapping) and isinstance(value, Mapping):
                merged[key] = merge_configs(current, value)
            else:
                merged[key] = value
    return merged


class ConfigLoader:
    """运行配置文件加载器"""

    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def load_config(self, file_path: Union[str, Path], format_type: Optional[str] = None) -> Dict[str, Any]:
        """
        加载配置文件

        Args:
            file_path: 配置文件路径
            format_type: 'json' 或 'yaml'，None 时按后缀 / 内容检测

        Returns:
            已完成环境变量替换的配置字典

        Raises:
            ConfigurationError: 文件不存在、无法读取、无法解析或顶层不是对象
        """
        path = Path(file_path)
        try:
            content = path.read_text(encoding=self.encoding)
        except FileNotFoundError as e:
            raise ConfigurationError(f"config file not found: {path}", config_key="config") from e
        except OSError as e:
            raise ConfigurationError(f"cannot read config file {path}: {e}", config_key="config") from e

        format_type = format_type or self.detect_format(path, content)
        config = self._parse(content, format_type, path)
        if not isinstance(config, dict):
            raise ConfigurationError(f"config file {path} must contain an object", config_key="config")

        logger.info("加载配置文件", path=str(path), format=format_type, keys=sorted(config))
        return substitute_env(config)

    @staticmethod
    def detect_format(path: Path, content: str) -> str:
        if path.suffix.lower() in YAML_SUFFIXES:
            return "yaml"
        if path.suffix.lower() == ".json" or content.lstrip().startswith(("{", "[")):
            return "json"
        return "yaml"

    @staticmethod
    def _parse(content: str, format_type: str, path: Path) -> Any:
        if format_type == "json":
            return safe_json_loads(content, default=None)
        try:
            return yaml.safe_load(content) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"invalid YAML in {path}: {e}", config_key="config") from e


def load_config_file(file_path: Union[str, Path]) -> Dict[str, Any]:
    return ConfigLoader().load_config(file_path)
