# Copyright (c) Opendatalab. All rights reserved.

import asyncio
import os
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

from src.file.handler import load_graph, safe_stem
from src.file.manager import save_json
from src.utils.helpers import ensure_output_dir
from .manager import BatchManager

graph_suffixes = [".graph", ".dot", ".gv"]


def find_graph_files(directory: str):
    """目录下（不递归）所有图文件，按文件名排序"""
    paths = [p for p in Path(directory).iterdir() if p.is_file() and p.suffix.lower() in graph_suffixes]
    return sorted(paths, key=lambda p: p.name)


def analyze_to_file(path: str, output_dir: str, budget: Optional[int] = None, cap: Optional[int] = None) -> str:
    """分析单个文件并写出 <name>.analysis.json"""
    from common import do_analyze

    doc = load_graph(path)
    report = do_analyze(doc, budget=budget, cap=cap)
    return save_json(report, os.path.join(output_dir, f"{safe_stem(path)}.analysis.json"))


async def process_batch_async(directory: str, output_dir: Optional[str] = None, budget: Optional[int] = None,
                              cap: Optional[int] = None, concurrency: int = 4) -> Dict[str, Any]:
    output_dir = ensure_output_dir(output_dir)
    manager = BatchManager(concurrency)
    jobs = {}
    for path in find_graph_files(directory):
        jobs[manager.create_task(path.name)] = str(path)
    logger.info(f"批处理 {directory}：{len(jobs)} 个图文件，输出到 {output_dir}")

    def worker(path: str) -> str:
        return analyze_to_file(path, output_dir, budget, cap)

    await manager.run(jobs, worker)
    summary = manager.summary()
    save_json(summary, os.path.join(output_dir, "batch_summary.json"))
    logger.info(f"批处理完成：成功 {summary['completed']}，失败 {summary['failed']}")
    return summary


def process_batch(directory: str, output_dir: Optional[str] = None, budget: Optional[int] = None,
                  cap: Optional[int] = None, concurrency: int = 4) -> Dict[str, Any]:
    return asyncio.run(process_batch_async(directory, output_dir, budget, cap, concurrency))
