# -*- coding: utf-8 -*-
"""
日志模块
提供统一的日志管理和格式化输出

日志一律写到 stderr，stdout 只留给命令的结果（文本或 JSON）。
"""

import logging
import sys
import time
from functools import wraps
from typing import IO, Optional

LOG_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}

DEFAULT_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


def setup_logger(
    name: str = "app",
    level: str = "WARNING",
    log_format: Optional[str] = None,
    stream: Optional[IO[str]] = None,
) -> logging.Logger:
    """设置并获取日志器

    重复调用会更新级别与输出流，而不是叠加处理器。

    Args:
        name: 日志器名称
        level: 日志级别 (DEBUG/INFO/WARNING/ERROR/CRITICAL)
        log_format: 日志格式
        stream: 输出流，默认 sys.stderr

    Returns:
        logging.Logger: 配置好的日志器
    """
    numeric_level = LOG_LEVELS.get(level.upper(), logging.WARNING)
    logger = logging.getLogger(name)
    logger.setLevel(numeric_level)

    for old in list(logger.handlers):
        logger.removeHandler(old)
    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setLevel(numeric_level)
    handler.setFormatter(logging.Formatter(log_format or DEFAULT_FORMAT))
    logger.addHandler(handler)

    logger.propagate = False
    return logger


class LogMixin:
    """日志混入类

    Example:
        class MachineCell(BaseCell, LogMixin):
            def _cmd_eval(self, args):
                self.logger.info("[MACHINE] ...")
    """

    @property
    def logger(self) -> logging.Logger:
        if not hasattr(self, '_logger'):
            self._logger = logging.getLogger(f"app.cell.{self.__class__.__name__}")
        return self._logger


def timed_operation(logger: logging.Logger, operation_name: str):
    """计时操作装饰器

    Example:
        @timed_operation(logger, "verify const_into_jump")
        def run():
            ...
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            logger.debug(f"[TIMER] 开始: {operation_name}")
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start_time
                logger.error(f"[TIMER] 失败: {operation_name}，耗时 {elapsed:.2f}s - {e}")
                raise
            elapsed = time.perf_counter() - start_time
            logger.info(f"[TIMER] 完成: {operation_name}，耗时 {elapsed:.2f}s")
            return result
        return wrapper
    return decorator
