"""扫描配置加载器."""

from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from .schema import SweepConfig
from .settings import HerfamSettings

# 缺省时从运行时设置继承的键
SETTINGS_KEYS = ("workers", "budget_subsets", "budget_tuples")


class ConfigError(ValueError):
    """扫描配置格式或取值错误."""

    pass


def _format_validation(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        where = ".".join(str(p) for p in item["loc"]) or "<root>"
        parts.append(f"{where}: {item['msg']}")
    return "; ".join(parts)


class ConfigLoader:
    """扫描配置加载器：key: value 文本（YAML）+ .env + 环境变量设置."""

    def __init__(self, config_path: Path | str, settings: HerfamSettings | None = None) -> None:
        """初始化配置加载器.

        Args:
            config_path: 配置文件路径
            settings: 运行时设置（默认从环境读取）
        """
        self.config_path = Path(config_path)
        self._load_env()
        self.settings = settings or HerfamSettings()

    def _load_env(self) -> None:
        """加载当前目录与配置文件所在目录的 .env."""
        for env_file in (self.config_path.parent / ".env", Path.cwd() / ".env"):
            if env_file.exists():
                load_dotenv(env_file)

    def _load_yaml(self) -> dict[str, Any]:
        if not self.config_path.exists():
            raise ConfigError(f"配置文件不存在: {self.config_path}")
        try:
            data = yaml.safe_load(self.config_path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            raise ConfigError(f"配置文件不是合法的 key: value 格式: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"配置文件必须是 key: value 映射: {self.config_path}")
        return data

    def load(self, overrides: dict[str, Any] | None = None) -> SweepConfig:
        """加载并校验配置.

        Args:
            overrides: 命令行覆盖项（值为 None 的键忽略）

        Raises:
            ConfigError: 文件缺失、格式错误或校验失败
        """
        data = self._load_yaml()
        for key in SETTINGS_KEYS:
            data.setdefault(key, getattr(self.settings, key))
        for key, value in (overrides or {}).items():
            if value is not None:
                data[key] = value
        try:
            return SweepConfig(**data)
        except ValidationError as e:
            raise ConfigError(f"配置校验失败: {_format_validation(e)}") from e

    def validate(self) -> tuple[bool, str]:
        """校验配置."""
        try:
            self.load()
            return True, "✅ 配置校验通过"
        except ConfigError as e:
            return False, f"❌ {e}"


def load_config(config_path: Path | str, overrides: dict[str, Any] | None = None) -> SweepConfig:
    """快捷函数：加载配置."""
    return ConfigLoader(config_path).load(overrides)
