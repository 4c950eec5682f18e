"""CLI 端到端测试."""

import json
import logging
import re

import pytest
from typer.testing import CliRunner

from herfam import __version__
from herfam.cli.main import app
from herfam.utils.logging import main_logger, set_level
from herfam.verify import checks

runner = CliRunner()

POWER2 = "n=2\n{}\n{1}\n{2}\n{1,2}\n"
POWER3 = "n=3\n{}\n{1}\n{2}\n{3}\n{1,2}\n{1,3}\n{2,3}\n{1,2,3}\n"
TIGHT3 = "n=3\n{}\n{1}\n{2}\n{3}\n"


def _records(output: str) -> list[dict]:
    """取出输出中的 JSON 记录行."""
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


@pytest.fixture
def sweep_config(tmp_path):
    """写入扫描配置."""

    def write(text: str):
        path = tmp_path / "sweep.yaml"
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def restore_log_level():
    """用例结束后恢复 INFO 级别."""
    yield
    set_level("INFO")


# ========== 基础 ==========


def test_version():
    """测试 --version."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_log_level_from_settings(restore_log_level):
    """测试未给 --log-level 时取 HERFAM_LOG_LEVEL."""
    result = runner.invoke(app, ["enum", "1"], env={"HERFAM_LOG_LEVEL": "DEBUG"})
    assert result.exit_code == 0
    assert main_logger.level == logging.DEBUG


def test_log_level_option_overrides_settings(restore_log_level):
    """测试 --log-level 优先于环境变量."""
    result = runner.invoke(
        app, ["--log-level", "WARNING", "enum", "1"], env={"HERFAM_LOG_LEVEL": "DEBUG"}
    )
    assert result.exit_code == 0
    assert main_logger.level == logging.WARNING


def test_parse_error_exits_1(family_file):
    """测试族文件越界元素."""
    result = runner.invoke(app, ["closure", str(family_file("n=2\n{3}\n"))])
    assert result.exit_code == 1


def test_duplicate_set_strict_and_lenient(family_file):
    """测试重复集合：严格报错，宽松合并."""
    path = family_file("n=2\n{1}\n{1}\n")
    assert runner.invoke(app, ["bases", str(path)]).exit_code == 1

    result = runner.invoke(app, ["bases", str(path), "--lenient"])
    assert result.exit_code == 0
    assert result.stdout == "n=2\n{1}\n"


# ========== 族变换 ==========


def test_closure(family_file):
    """测试遗传闭包输出."""
    result = runner.invoke(app, ["closure", str(family_file("n=3\n{1,2}\n{2,3}\n"))])
    assert result.exit_code == 0
    assert result.stdout == "n=3\n{}\n{1}\n{2}\n{1,2}\n{3}\n{2,3}\n"


def test_closure_hex(family_file):
    """测试十六进制输出."""
    result = runner.invoke(app, ["closure", str(family_file("n=2\n{1,2}\n")), "--hex"])
    assert result.stdout == "n=2\n0\n1\n2\n3\n"


def test_bases(family_file):
    """测试基."""
    result = runner.invoke(app, ["bases", str(family_file(POWER3))])
    assert result.stdout == "n=3\n{1,2,3}\n"


def test_compress(family_file):
    """测试 (1, 2)-压缩."""
    path = family_file("n=2\n{}\n{2}\n")
    result = runner.invoke(app, ["compress", str(path), "--x", "1", "--y", "2"])
    assert result.exit_code == 0
    assert result.stdout == "n=2\n{}\n{1}\n"


def test_compress_same_element(family_file):
    """测试 x = y 报错."""
    result = runner.invoke(app, ["compress", str(family_file(POWER2)), "--x", "1", "--y", "1"])
    assert result.exit_code == 1


def test_kernel(family_file):
    """测试核分解输出."""
    result = runner.invoke(app, ["kernel", str(family_file("n=2\n{1}\n{2}\n{1,2}\n"))])
    assert result.exit_code == 0
    assert result.stdout == "n=2\n{1,2}\n---\nn=2\n{1}\n{2}\n"


# ========== solve ==========


def test_solve_lstar(family_file):
    """测试 2^[3] 的最大相交子族."""
    result = runner.invoke(app, ["solve", "lstar", str(family_file(POWER3))])
    assert result.exit_code == 0
    (record,) = _records(result.stdout)
    assert record["check_name"] == "solve.lstar"
    assert record["verdict"] == "pass"
    assert record["values"] == {"value": "4", "best_star_size": "4"}
    assert record["witness"]["best_star"] == 1


def test_solve_beta(family_file):
    """测试单点族的 β = 1/4."""
    result = runner.invoke(app, ["solve", "beta", str(family_file(TIGHT3))])
    assert result.exit_code == 0
    (record,) = _records(result.stdout)
    assert record["values"] == {"value": "1/4"}
    assert record["witness"] == {"kernel": "3:", "subfamily": "3:0,1,2,4"}


def test_solve_cross_sum(family_file):
    """测试 2^[2] 上 k = 3 的最大和."""
    result = runner.invoke(app, ["solve", "cross-sum", str(family_file(POWER2)), "--k", "3"])
    assert result.exit_code == 0
    (record,) = _records(result.stdout)
    assert record["params"] == {"k": 3}
    assert record["values"] == {"value": "6"}
    assert len(record["witness"]["assignment"]) == 3


def test_solve_cross_product_bounds(family_file):
    """测试无法精确时输出上下界."""
    result = runner.invoke(app, ["solve", "cross-product", str(family_file(TIGHT3)), "--k", "3"])
    assert result.exit_code == 0
    (record,) = _records(result.stdout)
    assert record["values"] == {"value": "1", "upper": "64/27"}
    assert record["witness"]["exact"] is False


def test_solve_pairing(family_file):
    """测试 2^[2] 的 Berge 配对."""
    result = runner.invoke(app, ["solve", "pairing", str(family_file(POWER2))])
    assert result.exit_code == 0
    (record,) = _records(result.stdout)
    assert record["values"] == {"pairs": "2"}
    assert record["witness"]["pairs"] == ["{} | {1,2}", "{1} | {2}"]


def test_solve_budget_overrun(family_file):
    """测试预算不足：打印 skipped 记录并以 1 退出."""
    result = runner.invoke(
        app, ["solve", "beta", str(family_file(POWER2)), "--budget-subsets", "4"]
    )
    assert result.exit_code == 1
    (record,) = _records(result.stdout)
    assert record["verdict"] == "skipped"
    assert record["message"]


# ========== verify / report ==========


def test_verify_chvatal_n3(tmp_path, sweep_config):
    """测试 n = 3 星性质扫描写出 20 条结果与汇总."""
    out = tmp_path / "r.jsonl"
    path = sweep_config("checks: chvatal\nn: 3\n")
    result = runner.invoke(app, ["verify", str(path), "--out", str(out)])
    assert result.exit_code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 21
    summary = json.loads(lines[-1])
    assert summary["kind"] == "summary"
    assert summary["counts"]["pass"] == 20
    assert summary["timestamp"] is None


def test_verify_overrides(tmp_path, sweep_config):
    """测试命令行覆盖 n."""
    out = tmp_path / "r.jsonl"
    path = sweep_config("checks: chvatal\nn: 3\n")
    result = runner.invoke(app, ["verify", str(path), "--out", str(out), "--n", "2"])
    assert result.exit_code == 0
    assert len(out.read_text(encoding="utf-8").splitlines()) == 7


def test_verify_malformed_config(tmp_path, sweep_config):
    """测试非法配置不写输出."""
    out = tmp_path / "r.jsonl"
    path = sweep_config("checks: [chvatal\n")
    result = runner.invoke(app, ["verify", str(path), "--out", str(out)])
    assert result.exit_code == 1
    assert not out.exists()


def test_verify_defect_exit_code(tmp_path, sweep_config, monkeypatch):
    """测试已证情形被违反时以 3 退出."""
    monkeypatch.setattr(checks, "has_star_property", lambda family: (False, None))
    out = tmp_path / "r.jsonl"
    path = sweep_config("checks: chvatal\nn: 2\n")
    result = runner.invoke(app, ["verify", str(path), "--out", str(out)])
    assert result.exit_code == 3
    assert json.loads(out.read_text(encoding="utf-8").splitlines()[-1])["exit_code"] == 3


def test_report_markdown(tmp_path, sweep_config):
    """测试 report 汇总 verify 的输出."""
    out = tmp_path / "r.jsonl"
    runner.invoke(app, ["verify", str(sweep_config("checks: chvatal\nn: 3\n")), "--out", str(out)])
    result = runner.invoke(app, ["report", str(out), "-f", "markdown"])
    assert result.exit_code == 0
    assert "| chvatal | 20 | 0 | 0 | 0 |" in result.stdout

    result = runner.invoke(app, ["report", str(out)])
    assert result.exit_code == 0


def test_report_bad_file(tmp_path):
    """测试报告格式错误."""
    path = tmp_path / "bad.jsonl"
    path.write_text("not json\n", encoding="utf-8")
    assert runner.invoke(app, ["report", str(path)]).exit_code == 1


def test_report_revalidate(tmp_path, sweep_config, monkeypatch):
    """测试 --revalidate：同一实现下复核一致，实现改变后以 1 退出."""
    monkeypatch.setattr(checks, "has_star_property", lambda family: (False, None))
    out = tmp_path / "r.jsonl"
    runner.invoke(app, ["verify", str(sweep_config("checks: chvatal\nn: 2\n")), "--out", str(out)])
    result = runner.invoke(app, ["report", str(out), "--revalidate"])
    assert result.exit_code == 0
    assert "复核一致" in result.stdout

    monkeypatch.undo()
    result = runner.invoke(app, ["report", str(out), "--revalidate"])
    assert result.exit_code == 1
    assert "复核不一致" in result.stdout


def test_report_revalidate_skips_solve_records(tmp_path, family_file):
    """测试 solve 记录没有对应检查，复核时跳过."""
    out = tmp_path / "solve.jsonl"
    result = runner.invoke(app, ["solve", "beta", str(family_file(POWER2))])
    out.write_text(result.stdout.replace('"pass"', '"fail"'), encoding="utf-8")
    result = runner.invoke(app, ["report", str(out), "--revalidate"])
    assert result.exit_code == 0
    assert "跳过" in result.stdout


# ========== config ==========


def test_config_show(sweep_config):
    """测试显示补全默认值后的配置."""
    result = runner.invoke(app, ["config", "show", str(sweep_config("checks: chvatal\nn: 2..3\n"))])
    assert result.exit_code == 0
    assert "chvatal" in result.stdout
    assert "samples" in result.stdout


def test_config_validate(sweep_config):
    """测试配置校验的退出码."""
    path = sweep_config("checks: chvatal\nn: 3\n")
    result = runner.invoke(app, ["config", "validate", str(path)])
    assert result.exit_code == 0
    assert "配置校验通过" in result.stdout

    path = sweep_config("checks: chvatal\nn: 3\nfilter: compressed-wrt(0)\n")
    result = runner.invoke(app, ["config", "validate", str(path)])
    assert result.exit_code == 1

    result = runner.invoke(app, ["config", "show", str(path)])
    assert result.exit_code == 1


# ========== enum ==========


def test_enum():
    """测试枚举输出紧凑编码."""
    result = runner.invoke(app, ["enum", "2"])
    assert result.exit_code == 0
    families = [line for line in result.stdout.splitlines() if re.match(r"^\d+:", line)]
    assert families == ["2:", "2:0", "2:0,1", "2:0,1,2", "2:0,2", "2:0,1,2,3"]


def test_enum_reduce_and_limits():
    """测试同构约化与规模限制."""
    result = runner.invoke(app, ["enum", "3", "--reduce"])
    families = [line for line in result.stdout.splitlines() if re.match(r"^\d+:", line)]
    assert len(families) == 10

    assert runner.invoke(app, ["enum", "6"]).exit_code == 1
