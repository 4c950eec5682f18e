"""配置加载器与运行时设置测试."""

import pytest

from herfam.config.loader import ConfigError, ConfigLoader, load_config
from herfam.config.schema import DEFAULT_SAMPLES, SweepConfig
from herfam.config.settings import HerfamSettings, get_settings
from herfam.utils.budget import DEFAULT_SUBSET_BUDGET


@pytest.fixture
def config_file(tmp_path):
    """写入扫描配置文件."""

    def write(text: str):
        path = tmp_path / "sweep.yaml"
        path.write_text(text, encoding="utf-8")
        return path

    return write


# ========== SweepConfig ==========


def test_sweep_config_defaults():
    """测试默认值."""
    config = SweepConfig(checks=["chvatal"], n=3)
    assert config.n == [3]
    assert config.k is None
    assert config.filter == []
    assert config.seed == 0
    assert config.samples == DEFAULT_SAMPLES
    assert config.budget_subsets == DEFAULT_SUBSET_BUDGET
    assert not config.allow_large


@pytest.mark.parametrize(
    "value,expected",
    [(3, [3]), ("2..4", [2, 3, 4]), ([3, 2, 3], [2, 3]), ("4", [4])],
)
def test_sweep_config_n_forms(value, expected):
    """测试 n 的三种写法."""
    assert SweepConfig(checks=["berge"], n=value).n == expected


def test_sweep_config_string_forms():
    """测试逗号分隔的检查名与单个过滤原子."""
    config = SweepConfig(checks="berge, chvatal", n=2, filter="nonempty", k="2..3")
    assert config.checks == ["berge", "chvatal"]
    assert config.filter == ["nonempty"]
    assert config.k == [2, 3]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"checks": ["nope"], "n": 3},
        {"checks": [], "n": 3},
        {"checks": ["berge"], "n": 7},
        {"checks": ["berge"], "n": 6},
        {"checks": ["berge"], "n": "4..2"},
        {"checks": ["berge"], "n": 3, "k": [1]},
        {"checks": ["berge"], "n": 3, "filter": ["bogus"]},
        {"checks": ["berge"], "n": 3, "filter": ["compressed-wrt(0)"]},
        {"checks": ["berge"], "n": 3, "colour": "red"},
        {"checks": ["berge"], "n": True},
    ],
)
def test_sweep_config_rejects(kwargs):
    """测试非法配置."""
    with pytest.raises(ValueError):
        SweepConfig(**kwargs)


def test_sweep_config_allow_large():
    """测试 n = 6 需要显式放行."""
    config = SweepConfig(checks=["berge"], n=6, allow_large=True)
    assert config.n == [6]


# ========== ConfigLoader ==========


def test_loader_reads_key_value_file(config_file):
    """测试读取 key: value 文件."""
    path = config_file("checks: [chvatal, berge]\nn: 2..3\nseed: 7\n")
    config = ConfigLoader(path, HerfamSettings()).load()
    assert config.checks == ["chvatal", "berge"]
    assert config.n == [2, 3]
    assert config.seed == 7


def test_loader_inherits_settings(config_file):
    """测试 workers 与预算缺省时继承运行时设置."""
    path = config_file("checks: berge\nn: 2\n")
    settings = HerfamSettings(workers=3, budget_subsets=1024)
    config = ConfigLoader(path, settings).load()
    assert config.workers == 3
    assert config.budget_subsets == 1024

    path = config_file("checks: berge\nn: 2\nworkers: 2\n")
    assert ConfigLoader(path, settings).load().workers == 2


def test_loader_overrides(config_file):
    """测试命令行覆盖项（None 忽略）."""
    path = config_file("checks: berge\nn: 2\nseed: 1\n")
    config = load_config(path, {"n": "3", "seed": None, "k": "2..3"})
    assert config.n == [3]
    assert config.seed == 1
    assert config.k == [2, 3]


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("checks: [berge\n", "key: value"),
        ("- berge\n- chvatal\n", "映射"),
        ("checks: berge\n", "n"),
        ("checks: berge\nn: 2\nextra: 1\n", "extra"),
    ],
)
def test_loader_errors(config_file, text, fragment):
    """测试格式与校验错误."""
    path = config_file(text)
    with pytest.raises(ConfigError) as exc_info:
        ConfigLoader(path, HerfamSettings()).load()
    assert fragment in str(exc_info.value)


def test_loader_missing_file(tmp_path):
    """测试文件不存在."""
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.yaml")


def test_loader_validate(config_file):
    """测试 validate 返回结果与提示."""
    ok, message = ConfigLoader(config_file("checks: berge\nn: 2\n")).validate()
    assert ok
    assert "✅" in message

    ok, message = ConfigLoader(config_file("checks: nope\nn: 2\n")).validate()
    assert not ok
    assert "nope" in message


# ========== 运行时设置 ==========


def test_settings_from_environment(monkeypatch):
    """测试 HERFAM_* 环境变量."""
    monkeypatch.setenv("HERFAM_WORKERS", "4")
    monkeypatch.setenv("HERFAM_REPORT_TIMESTAMPS", "true")
    settings = get_settings()
    assert settings.workers == 4
    assert settings.report_timestamps


def test_settings_defaults(monkeypatch):
    """测试默认设置."""
    monkeypatch.delenv("HERFAM_WORKERS", raising=False)
    monkeypatch.delenv("HERFAM_REPORT_TIMESTAMPS", raising=False)
    settings = HerfamSettings(_env_file=None)
    assert settings.workers == 1
    assert not settings.report_timestamps
