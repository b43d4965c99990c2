"""
QThermo-Py CLI 模块

命令行入口、运行配置、子命令与图表数据。
"""

from .config import BetaGridSpec, RunConfig
from .figures import AssertionOutcome, FigureManifest, build_figures, write_figures
from .commands import COMMANDS, cmd_figures, cmd_gibbs, cmd_prior, cmd_qfi
from .main import build_parser, config_from_args, main

__all__ = [
    "BetaGridSpec",
    "RunConfig",
    "AssertionOutcome",
    "FigureManifest",
    "build_figures",
    "write_figures",
    "COMMANDS",
    "cmd_figures",
    "cmd_gibbs",
    "cmd_prior",
    "cmd_qfi",
    "build_parser",
    "config_from_args",
    "main",
]
