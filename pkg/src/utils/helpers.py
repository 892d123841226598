# Copyright (c) Opendatalab. All rights reserved.

import os
from typing import Optional

from loguru import logger

DEFAULT_BUDGET = 100000
DEFAULT_TREE_CAP = 1000000
DEFAULT_OUTPUT_DIR = "./output"


def _env_int(name: str) -> Optional[int]:
    value = os.getenv(name, None)
    if value is None:
        return None
    try:
        parsed = int(value)
    except ValueError:
        logger.warning(f"环境变量 {name}={value!r} 不是整数，已忽略")
        return None
    if parsed <= 0:
        logger.warning(f"环境变量 {name}={parsed} 必须为正数，已忽略")
        return None
    return parsed


def resolve_budget(flag: Optional[int] = None) -> int:
    """单连通判定的基本步数预算：命令行参数 > BB_BUDGET > 默认值"""
    if flag is not None:
        return flag
    return _env_int("BB_BUDGET") or DEFAULT_BUDGET


def resolve_tree_cap(flag: Optional[int] = None) -> int:
    """生成树搜索上限：命令行参数 > BB_BUDGET > 默认值"""
    if flag is not None:
        return flag
    return _env_int("BB_BUDGET") or DEFAULT_TREE_CAP


def ensure_output_dir(path: Optional[str] = None) -> str:
    """确保输出目录存在"""
    path = path or os.getenv("BB_OUTPUT_DIR", None) or DEFAULT_OUTPUT_DIR
    os.makedirs(path, exist_ok=True)
    return path
