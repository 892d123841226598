# Copyright (c) Opendatalab. All rights reserved.

import asyncio
from typing import Any, Callable, Dict, List, Optional

from loguru import logger

from src.utils.errors import BBError
from .models import TaskInfo, TaskStatus

# worker(path) -> 结果文件路径；在线程中执行，不共享可变状态
Worker = Callable[[str], str]


class BatchManager:
    """批处理任务管理器：每个文件一个任务，用信号量限制并发"""

    def __init__(self, concurrency: int = 4):
        self.tasks: Dict[str, TaskInfo] = {}
        self.concurrency = max(1, concurrency)

    def create_task(self, filename: str, task_id: Optional[str] = None) -> str:
        """创建新任务；task_id 默认取文件名，保证汇总可复现"""
        task_id = task_id or filename
        if task_id in self.tasks:
            raise ValueError(f"duplicate task id {task_id!r}")
        self.tasks[task_id] = TaskInfo(task_id, filename)
        return task_id

    def get_task(self, task_id: str) -> Optional[TaskInfo]:
        return self.tasks.get(task_id)

    def update_task_status(self, task_id: str, status: TaskStatus, message: str = None,
                           error_message: str = None, exit_code: int = None):
        task = self.tasks.get(task_id)
        if task:
            task.status = status
            if message is not None:
                task.message = message
            if error_message is not None:
                task.error_message = error_message
            if exit_code is not None:
                task.exit_code = exit_code

    def get_all_tasks(self) -> List[Dict[str, Any]]:
        """按任务 id 排序，与完成顺序无关"""
        return [self.tasks[k].to_dict() for k in sorted(self.tasks)]

    async def _run_one(self, task_id: str, path: str, worker: Worker, semaphore: asyncio.Semaphore):
        self.update_task_status(task_id, TaskStatus.QUEUED, "已加入队列")
        async with semaphore:
            self.update_task_status(task_id, TaskStatus.PROCESSING, "正在分析")
            try:
                result_path = await asyncio.to_thread(worker, path)
            except BBError as e:
                logger.exception(f"任务 {task_id} 失败: {e}")
                self.update_task_status(task_id, TaskStatus.FAILED, "处理失败", str(e), e.exit_code)
                return
            except Exception as e:
                logger.exception(f"任务 {task_id} 出现意外错误: {e}")
                self.update_task_status(task_id, TaskStatus.FAILED, "处理失败", str(e), 1)
                return
            self.tasks[task_id].result_path = result_path
            self.update_task_status(task_id, TaskStatus.COMPLETED, "分析完成")
            logger.info(f"任务 {task_id} 处理完成: {result_path}")

    async def run(self, jobs: Dict[str, str], worker: Worker) -> List[Dict[str, Any]]:
        """jobs: task_id -> 文件路径"""
        semaphore = asyncio.Semaphore(self.concurrency)
        await asyncio.gather(*(self._run_one(task_id, path, worker, semaphore) for task_id, path in jobs.items()))
        return self.get_all_tasks()

    def summary(self) -> Dict[str, Any]:
        tasks = self.get_all_tasks()
        return {
            "total": len(tasks),
            "completed": sum(1 for t in tasks if t["status"] == TaskStatus.COMPLETED.value),
            "failed": sum(1 for t in tasks if t["status"] == TaskStatus.FAILED.value),
            "tasks": tasks,
        }
