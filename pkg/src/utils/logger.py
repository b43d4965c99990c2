"""
QThermo-Py 日志记录模块

- text / json / simple 三种格式
- 关键字参数作为结构化字段随记录输出
- 只写 stderr，stdout 留给 CSV / JSON 结果
"""

import json
import logging
import sys
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Optional, TextIO, Union

import numpy as np


class LogLevel(Enum):
    """日志级别枚举"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LogFormat(Enum):
    """日志格式枚举"""
    JSON = "json"
    TEXT = "text"
    SIMPLE = "simple"


TEXT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
SIMPLE_FORMAT = "%(levelname)s - %(message)s"

ROOT_NAME = "qthermo"


def _plain(value: Any) -> Any:
    # numpy 标量与小数组在字段中按 Python 值输出
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


def _fields_of(record: logging.LogRecord) -> Dict[str, Any]:
    return getattr(record, "fields", None) or {}


class FieldsFormatter(logging.Formatter):
    """文本格式化器：`消息 | key=value ...`"""

    def __init__(self, fmt: str, color: bool = False):
        super().__init__(fmt)
        self.color = color

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        levelname = record.levelname
        if self.color and levelname in self.COLORS:
            record.levelname = f"{self.COLORS[levelname]}{levelname}{self.RESET}"
        try:
            message = super().format(record)
        finally:
            record.levelname = levelname

        fields = _fields_of(record)
        if fields:
            rendered = " ".join(f"{key}={_plain(value)!r}" for key, value in fields.items())
            message = f"{message} | {rendered}"
        return message


class JsonFormatter(logging.Formatter):
    """每条记录一行 JSON，结构化字段并入顶层"""

    def format(self, record: logging.LogRecord) -> str:
        entry: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        for key, value in _fields_of(record).items():
            entry[key] = _plain(value)
        return json.dumps(entry, ensure_ascii=False, default=str)


def _as_level(level: Union[LogLevel, str]) -> LogLevel:
    return level if isinstance(level, LogLevel) else LogLevel(level.upper())


def _as_format(format_type: Union[LogFormat, str]) -> LogFormat:
    return format_type if isinstance(format_type, LogFormat) else LogFormat(format_type)


def _build_formatter(format_type: LogFormat, stream: TextIO) -> logging.Formatter:
    if format_type == LogFormat.JSON:
        return JsonFormatter()
    fmt = SIMPLE_FORMAT if format_type == LogFormat.SIMPLE else TEXT_FORMAT
    return FieldsFormatter(fmt, color=format_type == LogFormat.TEXT and stream.isatty())


class QThermoLogger:
    """
    带结构化字段的日志记录器

    所有记录器都是 `qthermo` 根记录器的子记录器，处理器只挂在根上，
    因此 setup_logger 重新配置后已有实例立即生效。
    """

    def __init__(self, name: str):
        self.name = name if name.startswith(ROOT_NAME) else f"{ROOT_NAME}.{name}"
        self._logger = logging.getLogger(self.name)

    def get_logger(self) -> logging.Logger:
        """获取标准 logging.Logger 实例"""
        return self._logger

    def is_enabled_for(self, level: int) -> bool:
        return self._logger.isEnabledFor(level)

    def debug(self, message: str, **fields: Any) -> None:
        self._log(logging.DEBUG, message, fields)

    def info(self, message: str, **fields: Any) -> None:
        self._log(logging.INFO, message, fields)

    def warning(self, message: str, **fields: Any) -> None:
        self._log(logging.WARNING, message, fields)

    def error(self, message: str, **fields: Any) -> None:
        self._log(logging.ERROR, message, fields)

    def critical(self, message: str, **fields: Any) -> None:
        self._log(logging.CRITICAL, message, fields)

    def _log(self, level: int, message: str, fields: Dict[str, Any]) -> None:
        # 积分与扫描的热路径上 DEBUG 通常关闭，先判断再构造记录
        if not self._logger.isEnabledFor(level):
            return
        self._logger.log(level, message, extra={"fields": fields}, stacklevel=3)


_logger_cache: Dict[str, QThermoLogger] = {}


def setup_logger(
    level: Union[LogLevel, str] = LogLevel.WARNING,
    format_type: Union[LogFormat, str] = LogFormat.TEXT,
    stream: Optional[TextIO] = None,
) -> None:
    """
    配置 `qthermo` 根记录器

    Args:
        level: 日志级别
        format_type: 日志格式类型
        stream: 输出流，默认为调用时的 sys.stderr
    """
    stream = stream or sys.stderr
    root = logging.getLogger(ROOT_NAME)
    root.setLevel(_as_level(level).value)
    root.propagate = False
    root.handlers.clear()

    handler = logging.StreamHandler(stream)
    handler.setFormatter(_build_formatter(_as_format(format_type), stream))
    root.addHandler(handler)


def get_logger(name: str = ROOT_NAME) -> QThermoLogger:
    """
    获取日志记录器实例

    Args:
        name: 日志记录器名称，通常传 __name__

    Returns:
        QThermoLogger: 日志记录器实例
    """
    if name not in _logger_cache:
        _logger_cache[name] = QThermoLogger(name)
    return _logger_cache[name]
