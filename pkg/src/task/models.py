# Copyright (c) Opendatalab. All rights reserved.

from enum import Enum
from typing import Any, Dict, Optional


class TaskStatus(Enum):
    """任务状态枚举"""
    PENDING = "pending"
    QUEUED = "queued"  # 等待信号量
    PROCESSING = "processing"
    COMPLETED = "completed"
    FAILED = "failed"


class TaskInfo:
    """批处理中单个图文件的任务信息"""

    def __init__(self, task_id: str, filename: str):
        self.task_id = task_id
        self.filename = filename
        self.status = TaskStatus.PENDING
        self.message = "等待处理"
        self.result_path: Optional[str] = None
        self.error_message: Optional[str] = None
        self.exit_code = 0

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式；不含时间戳，保证相同输入得到相同汇总"""
        return {
            "task_id": self.task_id,
            "filename": self.filename,
            "status": self.status.value,
            "message": self.message,
            "result_path": self.result_path,
            "error_message": self.error_message,
            "exit_code": self.exit_code,
        }
