# Copyright (c) Opendatalab. All rights reserved.

import json
import os
import threading
from functools import lru_cache
from typing import Any, Dict

from jsonschema import Draft7Validator
from loguru import logger

# 随包分发的 JSON Schema（使用相对于当前文件的绝对路径，避免工作目录差异影响）
SCHEMA_DIR = os.path.join(os.path.dirname(__file__), "schemas")
SCHEMA_NAMES = ("presentation", "decomposition")

# 文件锁，批处理的多个线程可能同时写同一目录
write_lock = threading.Lock()


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    """加载 schemas/<name>.schema.json"""
    if name not in SCHEMA_NAMES:
        raise ValueError(f"unknown schema {name!r}")
    with open(os.path.join(SCHEMA_DIR, f"{name}.schema.json"), "r", encoding="utf-8") as f:
        schema = json.load(f)
    Draft7Validator.check_schema(schema)
    return schema


def validate_document(document: Dict[str, Any], name: str) -> None:
    """校验失败时抛出 jsonschema.ValidationError（取最先出现的错误）"""
    validator = Draft7Validator(load_schema(name))
    errors = sorted(validator.iter_errors(document), key=lambda e: [str(p) for p in e.absolute_path])
    if errors:
        logger.warning(f"{name} 文档未通过校验：{errors[0].message}")
        raise errors[0]


def save_json(document: Dict[str, Any], path: str) -> str:
    """写入 JSON 文件并返回路径"""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with write_lock:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(document, f, ensure_ascii=False, indent=2)
            f.write("\n")
    logger.debug(f"已写入 {path}")
    return path
