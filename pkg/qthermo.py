#!/usr/bin/env python3
"""
QThermo-Py 命令行启动脚本

加载项目根目录下的 .env（QTHERMO_* 设置），然后运行 CLI。
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

env_file = project_root / ".env"
if env_file.exists():
    load_dotenv(env_file)

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
