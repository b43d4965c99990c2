"""
QThermo-Py 工具模块

日志、JSON 处理、配置加载、运行配置验证与表格输出。
"""

from .logger import LogFormat, LogLevel, get_logger, setup_logger
from .json_utils import safe_json_dumps, safe_json_loads
from .config_loader import ConfigLoader, load_config_file, merge_configs, substitute_env
from .validators import ConfigIssue, RunConfigValidator, validate_run_config
from .tables import Table, emit_table, format_cell, render_table, table_to_csv, table_to_json, write_text

__all__ = [
    # Logger utilities
    "LogFormat",
    "LogLevel",
    "get_logger",
    "setup_logger",
    # JSON utilities
    "safe_json_dumps",
    "safe_json_loads",
    # Config utilities
    "ConfigLoader",
    "load_config_file",
    "merge_configs",
    "substitute_env",
    # Validators
    "ConfigIssue",
    "RunConfigValidator",
    "validate_run_config",
    # Tables
    "Table",
    "emit_table",
    "format_cell",
    "render_table",
    "table_to_csv",
    "table_to_json",
    "write_text",
]
