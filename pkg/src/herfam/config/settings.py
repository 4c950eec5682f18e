"""运行时设置（环境变量 HERFAM_* 与 .env）."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from herfam.utils.budget import DEFAULT_SUBSET_BUDGET, DEFAULT_TUPLE_BUDGET


class HerfamSettings(BaseSettings):
    """herfam 运行时设置."""

    model_config = SettingsConfigDict(env_prefix="HERFAM_", env_file=".env", extra="ignore")

    log_level: str = Field(default="INFO", description="日志级别")
    workers: int = Field(default=1, ge=1, description="扫描并行进程数")
    budget_subsets: int = Field(default=DEFAULT_SUBSET_BUDGET, ge=1, description="子族扫描预算")
    budget_tuples: int = Field(default=DEFAULT_TUPLE_BUDGET, ge=1, description="k 元组枚举预算")
    report_timestamps: bool = Field(
        default=False, description="报告记录是否写入时间戳（关闭时输出逐字节可复现）"
    )


def get_settings() -> HerfamSettings:
    """读取当前环境的设置."""
    return HerfamSettings()
