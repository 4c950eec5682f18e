"""herfam 统一日志模块."""

import logging
import os
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from rich.console import Console
from rich.logging import RichHandler

if TYPE_CHECKING:
    from herfam.verify.result import CheckResult

# 日志级别映射
LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

# 默认日志格式
DEFAULT_FORMAT = "%(asctime)s | %(name)s | %(levelname)s | %(message)s"
SIMPLE_FORMAT = "%(message)s"

# 全局 logger 实例
_loggers: dict[str, logging.Logger] = {}


def get_logger(
    name: str = "herfam",
    level: str | None = None,
    log_file: str | Path | None = None,
    use_rich: bool = True,
) -> logging.Logger:
    """获取 logger 实例.

    日志一律输出到 stderr，stdout 留给族/JSON 输出.

    Args:
        name: logger 名称
        level: 日志级别（默认从环境变量 HERFAM_LOG_LEVEL 或 INFO）
        log_file: 日志文件路径（可选）
        use_rich: 是否使用 Rich 格式化输出

    Returns:
        配置好的 logger 实例
    """
    if name in _loggers:
        return _loggers[name]

    if level is None:
        level = os.getenv("HERFAM_LOG_LEVEL", "INFO")
    log_level = LOG_LEVELS.get(level.upper(), logging.INFO)

    logger = logging.getLogger(name)
    logger.setLevel(log_level)
    logger.handlers = []
    logger.propagate = False

    console_handler: logging.Handler
    if use_rich:
        console_handler = RichHandler(
            console=Console(stderr=True),
            show_time=True,
            show_path=False,
            rich_tracebacks=True,
        )
        console_handler.setFormatter(logging.Formatter(SIMPLE_FORMAT))
    else:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))

    console_handler.setLevel(log_level)
    logger.addHandler(console_handler)

    # 文件 handler（可选）
    if log_file:
        log_path = Path(log_file).expanduser()
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_path, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
        file_handler.setLevel(log_level)
        logger.addHandler(file_handler)

    _loggers[name] = logger
    return logger


def set_level(level: str) -> None:
    """调整所有已创建 logger 的级别."""
    log_level = LOG_LEVELS.get(level.upper(), logging.INFO)
    for logger in _loggers.values():
        logger.setLevel(log_level)
        for handler in logger.handlers:
            handler.setLevel(log_level)


def log_check_result(logger: logging.Logger, result: "CheckResult") -> None:
    """记录单条检查结果.

    pass 记 DEBUG，skipped 记 INFO，猜想反例记 WARNING，定理缺陷记 ERROR.

    Args:
        logger: logger 实例
        result: 检查结果
    """
    msg = f"Check: {result.check_name} | family={result.family}"
    if result.params:
        msg += " | " + ", ".join(f"{k}={v}" for k, v in sorted(result.params.items()))
    msg += f" → {result.verdict.value}"
    if result.message:
        msg += f" ({result.message})"

    verdict = result.verdict.value
    if verdict == "defect":
        logger.error(msg)
    elif verdict == "fail":
        logger.warning(msg)
    elif verdict == "skipped":
        logger.info(msg)
    else:
        logger.debug(msg)


def log_sweep_progress(
    logger: logging.Logger,
    n: int,
    families: int,
    results: int,
    duration_sec: float | None = None,
) -> None:
    """记录扫描进度.

    Args:
        logger: logger 实例
        n: 基集大小
        families: 已处理的族数量
        results: 已产生的结果数量
        duration_sec: 执行时长（可选）
    """
    msg_parts = [f"Sweep: n={n}", f"families={families}", f"results={results}"]
    if duration_sec is not None:
        msg_parts.append(f"Duration: {duration_sec:.2f}s")
    logger.info(" | ".join(msg_parts))


# 预创建主 logger
main_logger = get_logger("herfam")
