# -*- coding: utf-8 -*-
"""
多进程管理器

验证样本彼此独立，可以分发到进程池。workers 为 0 时在本进程内顺序执行，
结果与并行执行一致。
"""

import atexit
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Optional, Sequence

logger = logging.getLogger(__name__)


def _apply(func: Callable, args: Sequence[Any]) -> Any:
    return func(*args)


class MultiprocessManager:
    """多进程管理器（单例模式）"""

    _instance: Optional['MultiprocessManager'] = None

    def __new__(cls) -> 'MultiprocessManager':
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self._initialized = True
        self._executor: Optional[ProcessPoolExecutor] = None
        self._workers = 0
        atexit.register(self.shutdown)

    @property
    def workers(self) -> int:
        return self._workers

    def configure(self, workers: int):
        """workers < 0 表示使用全部 CPU；0 表示顺序执行"""
        if workers < 0:
            workers = multiprocessing.cpu_count()
        if workers != self._workers:
            self.shutdown()
            self._workers = workers
            logger.info(f"[MP] 工作进程数: {workers}")

    def is_enabled(self) -> bool:
        return self._workers > 0

    @property
    def executor(self) -> Optional[ProcessPoolExecutor]:
        """获取进程池（懒加载）"""
        if not self.is_enabled():
            return None
        if self._executor is None:
            self._executor = ProcessPoolExecutor(max_workers=self._workers)
            logger.info(f"[MP] 进程池已启动，{self._workers} 个工作进程")
        return self._executor

    def map(self, func: Callable, args_list: Sequence[Sequence[Any]]) -> list:
        """对每组参数调用 func(*args)，结果按输入次序返回"""
        if not self.is_enabled() or len(args_list) < 2:
            return [func(*args) for args in args_list]
        return list(self.executor.map(_apply, [func] * len(args_list), args_list))

    def shutdown(self, wait: bool = True):
        """关闭进程池"""
        if self._executor is not None:
            self._executor.shutdown(wait=wait)
            self._executor = None
            logger.info("[MP] 进程池已关闭")


_manager = MultiprocessManager()


def get_multiprocess_manager() -> MultiprocessManager:
    """获取全局多进程管理器"""
    return _manager
