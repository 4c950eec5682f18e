"""herfam CLI 入口.

标准输出只写族文本与 JSON 记录；提示与错误写到标准错误.
退出码：0 成功；1 输入/配置/预算/IO 错误；2 发现猜想反例；3 发现库缺陷.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, NoReturn

import typer
from rich.console import Console
from rich.markdown import Markdown

from herfam import __version__
from herfam.config.loader import ConfigError, ConfigLoader
from herfam.config.settings import HerfamSettings, get_settings
from herfam.core.codec import (
    FamilyParseError,
    encode_compact,
    format_family,
    format_hex,
    read_family,
)
from herfam.core.family import (
    FamilyError,
    SetFamily,
    bases_of,
    compress,
    hereditary_closure,
    split_kernel,
)
from herfam.enumeration.hereditary import enum_hereditary
from herfam.report.records import ReportRecord
from herfam.report.reporter import ReportGenerator
from herfam.report.writer import ReportFormatError, read_report, write_report
from herfam.solvers.cross import CrossWitness, max_cross_product, max_cross_sum
from herfam.solvers.intersecting import best_star, beta_witness, largest_intersecting
from herfam.solvers.pairing import PairingDefectError, berge_pairing
from herfam.utils.budget import Budget, BudgetExceededError
from herfam.utils.logging import main_logger, set_level
from herfam.verify.checks import revalidate
from herfam.verify.registry import make_result
from herfam.verify.result import Value, Verdict
from herfam.verify.sweep import run_sweep

app = typer.Typer(
    name="herfam",
    help="Extremal problems and conjecture checks for hereditary set families",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)

EXIT_ERROR = 1
EXIT_DEFECT = 3


class Metric(str, Enum):
    """solve 支持的量."""

    LSTAR = "lstar"
    BETA = "beta"
    CROSS_SUM = "cross-sum"
    CROSS_PRODUCT = "cross-product"
    PAIRING = "pairing"


class ReportFormat(str, Enum):
    TABLE = "table"
    MARKDOWN = "markdown"


class ConfigAction(str, Enum):
    SHOW = "show"
    VALIDATE = "validate"


def version_callback(value: bool) -> None:
    """显示版本信息."""
    if value:
        console.print(f"herfam version: {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="显示版本信息",
        callback=version_callback,
        is_eager=True,
    ),
    log_level: str = typer.Option(None, "--log-level", help="日志级别（默认取 HERFAM_LOG_LEVEL）"),
) -> None:
    """herfam - 遗传集合族的极值计算与定理/猜想验证."""
    set_level(log_level or get_settings().log_level)


# ========== 公共工具 ==========


def _fail(message: str, code: int = EXIT_ERROR) -> NoReturn:
    err_console.print(f"[red]❌ {message}[/red]")
    raise typer.Exit(code)


@contextmanager
def _cli_errors() -> Iterator[None]:
    """把库异常映射为退出码."""
    try:
        yield
    except FamilyParseError as e:
        _fail(f"族文件解析失败: {e}")
    except PairingDefectError as e:
        _fail(f"库缺陷: {e}", EXIT_DEFECT)
    except (FamilyError, ConfigError, BudgetExceededError) as e:
        _fail(str(e))
    except ReportFormatError as e:
        _fail(f"报告格式错误: {e}")
    except OSError as e:
        _fail(f"读写失败: {e}")


def _read(file: Path, strict: bool) -> SetFamily:
    return read_family(file, strict=strict)


def _emit(family: SetFamily, hex_output: bool) -> None:
    typer.echo(format_hex(family) if hex_output else format_family(family), nl=False)


def _budget(settings: HerfamSettings, subsets: int | None, tuples: int | None) -> Budget:
    return Budget(
        subsets=subsets if subsets is not None else settings.budget_subsets,
        tuples=tuples if tuples is not None else settings.budget_tuples,
    )


STRICT_OPTION = typer.Option(True, "--strict/--lenient", help="重复集合报错 / 合并")
HEX_OPTION = typer.Option(False, "--hex", help="以十六进制格式输出")


# ========== 族变换 ==========


@app.command()
def closure(
    file: Path = typer.Argument(..., help="族文件"),
    hex_output: bool = HEX_OPTION,
    strict: bool = STRICT_OPTION,
) -> None:
    """输出遗传闭包."""
    with _cli_errors():
        _emit(hereditary_closure(_read(file, strict)), hex_output)


@app.command()
def bases(
    file: Path = typer.Argument(..., help="族文件"),
    hex_output: bool = HEX_OPTION,
    strict: bool = STRICT_OPTION,
) -> None:
    """输出基（包含意义下的极大成员）."""
    with _cli_errors():
        _emit(bases_of(_read(file, strict)), hex_output)


@app.command(name="compress")
def compress_cmd(
    file: Path = typer.Argument(..., help="族文件"),
    x: int = typer.Option(..., "--x", help="压缩目标元素"),
    y: int = typer.Option(..., "--y", help="被替换元素"),
    hex_output: bool = HEX_OPTION,
    strict: bool = STRICT_OPTION,
) -> None:
    """输出 (x, y)-压缩.

    Examples:
        herfam compress fam.txt --x 1 --y 2
    """
    with _cli_errors():
        _emit(compress(_read(file, strict), x, y), hex_output)


@app.command()
def kernel(
    file: Path = typer.Argument(..., help="族文件"),
    hex_output: bool = HEX_OPTION,
    strict: bool = STRICT_OPTION,
) -> None:
    """输出核 A*，一行 "---"，再输出剩余 A′."""
    with _cli_errors():
        split = split_kernel(_read(file, strict))
        _emit(split.kernel, hex_output)
        typer.echo("---")
        _emit(split.residue, hex_output)


# ========== 单次求解 ==========


def _assignment(witness: CrossWitness) -> list[str]:
    return [encode_compact(f) for f in witness.assignment]


def _solve(
    metric: Metric, family: SetFamily, k: int, budget: Budget
) -> tuple[dict[str, int], dict[str, Value], dict[str, Any]]:
    """返回 (参数, 值, 见证)."""
    if metric is Metric.LSTAR:
        result = largest_intersecting(family)
        top = best_star(family)
        return (
            {},
            {"value": result.size, "best_star_size": top.size},
            {"intersecting": encode_compact(result.witness), "best_star": top.x},
        )

    if metric is Metric.BETA:
        attained = beta_witness(family, budget)
        return (
            {},
            {"value": attained.value},
            {
                "kernel": encode_compact(attained.kernel),
                "subfamily": encode_compact(attained.subfamily),
            },
        )

    if metric is Metric.CROSS_SUM:
        optimum = max_cross_sum(family, k, budget)
        split = optimum.witness.split
        return (
            {"k": k},
            {"value": optimum.value},
            {
                "assignment": _assignment(optimum.witness),
                "kernel": encode_compact(split.kernel),
                "residue": encode_compact(split.residue),
            },
        )

    if metric is Metric.CROSS_PRODUCT:
        optimum = max_cross_product(family, k, budget)
        values: dict[str, Value] = {"value": optimum.value}
        if optimum.upper is not None:
            values["upper"] = optimum.upper
        return (
            {"k": k},
            values,
            {"assignment": _assignment(optimum.witness), "exact": optimum.exact},
        )

    pairing = berge_pairing(family)
    return (
        {},
        {"pairs": len(pairing.pairs)},
        {"pairs": pairing.describe(), "leftover_empty": pairing.leftover_empty},
    )


@app.command()
def solve(
    metric: Metric = typer.Argument(..., help="lstar | beta | cross-sum | cross-product | pairing"),
    file: Path = typer.Argument(..., help="族文件"),
    k: int = typer.Option(2, "--k", "-k", help="交叉相交的族数 k"),
    budget_subsets: int = typer.Option(None, "--budget-subsets", help="子族扫描预算"),
    budget_tuples: int = typer.Option(None, "--budget-tuples", help="k 元组枚举预算"),
    strict: bool = STRICT_OPTION,
) -> None:
    """计算一个量，在标准输出打印一条 JSON 记录.

    Examples:
        herfam solve lstar power3.txt
        herfam solve cross-sum power2.txt --k 3
    """
    name = f"solve.{metric.value}"
    with _cli_errors():
        family = _read(file, strict)
        budget = _budget(get_settings(), budget_subsets, budget_tuples)
        try:
            params, values, witness = _solve(metric, family, k, budget)
        except BudgetExceededError as e:
            params = {"k": k} if metric in (Metric.CROSS_SUM, Metric.CROSS_PRODUCT) else {}
            skipped = make_result(name, family, params, Verdict.SKIPPED, message=str(e))
            typer.echo(ReportRecord.from_result(skipped).model_dump_json())
            raise
        result = make_result(name, family, params, Verdict.PASS, values, witness)
        typer.echo(ReportRecord.from_result(result).model_dump_json())


# ========== 扫描与报告 ==========


@app.command()
def verify(
    config_file: Path = typer.Argument(..., help="扫描配置（key: value）"),
    out: Path = typer.Option(..., "--out", "-o", help="JSONL 输出路径"),
    n: str = typer.Option(None, "--n", help="覆盖 n（如 3 或 3..4）"),
    k: str = typer.Option(None, "--k", help="覆盖 k（如 4 或 2..3）"),
    filter: list[str] = typer.Option(None, "--filter", help="过滤原子（可重复）"),
    budget_subsets: int = typer.Option(None, "--budget-subsets", help="子族扫描预算"),
    budget_tuples: int = typer.Option(None, "--budget-tuples", help="k 元组枚举预算"),
    seed: int = typer.Option(None, "--seed", help="随机阶段种子"),
    workers: int = typer.Option(None, "--workers", "-w", help="并行进程数"),
) -> None:
    """按配置运行扫描，写出 JSONL 报告.

    退出码 0 全部通过；2 发现猜想反例；3 发现库缺陷.

    Examples:
        herfam verify configs/chvatal_n3.yaml --out results/chvatal.jsonl
        herfam verify configs/sums.yaml --out r.jsonl --n 2..3 --seed 7
    """
    settings = get_settings()
    overrides: dict[str, Any] = {
        "n": n,
        "k": k,
        "filter": filter or None,
        "budget_subsets": budget_subsets,
        "budget_tuples": budget_tuples,
        "seed": seed,
        "workers": workers,
    }
    with _cli_errors():
        config = ConfigLoader(config_file, settings).load(overrides)
        main_logger.info(f"扫描 {', '.join(config.checks)}，n = {config.n}")
        results, summary = run_sweep(config)
        write_report(out, results, summary, timestamps=settings.report_timestamps)

    err_console.print(
        f"[green]✅ {summary.total} 条结果已写入 {out}[/green] "
        f"(pass {summary.count(Verdict.PASS)}, fail {summary.count(Verdict.FAIL)}, "
        f"defect {summary.count(Verdict.DEFECT)}, skipped {summary.count(Verdict.SKIPPED)})"
    )
    if summary.exit_code:
        err_console.print(f"[yellow]⚠️  发现问题，退出码 {summary.exit_code}[/yellow]")
    raise typer.Exit(summary.exit_code)


@app.command(name="enum")
def enum_cmd(
    n: int = typer.Argument(..., help="基集大小"),
    filter: list[str] = typer.Option(None, "--filter", help="过滤原子（可重复）"),
    reduce: bool = typer.Option(False, "--reduce", help="只保留同构类代表"),
    allow_large: bool = typer.Option(False, "--allow-large", help="放行 n = 6"),
) -> None:
    """每行一个遗传族（紧凑编码）.

    Examples:
        herfam enum 3
        herfam enum 4 --filter "compressed-wrt(1)" --reduce
    """
    with _cli_errors():
        count = 0
        for family in enum_hereditary(
            n, filter or None, reduce_isomorphic=reduce, allow_large=allow_large
        ):
            typer.echo(encode_compact(family))
            count += 1
    err_console.print(f"[dim]共 {count} 个遗传族[/dim]")


def _revalidate_problems(problems: list[ReportRecord]) -> None:
    """重新运行问题记录；有不一致时以 1 退出."""
    checked = mismatched = 0
    for record in problems:
        try:
            with _cli_errors():
                same = revalidate(record.to_result())
        except KeyError:
            console.print(f"[dim]跳过未注册的检查 {record.check_name}[/dim]")
            continue
        checked += 1
        if not same:
            mismatched += 1
            console.print(f"[red]❌ 复核不一致: {record.check_name} {record.family}[/red]")
    if mismatched:
        raise typer.Exit(EXIT_ERROR)
    console.print(f"[green]✅ {checked} 条问题记录复核一致[/green]")


@app.command()
def report(
    file: Path = typer.Argument(..., help="verify 生成的 JSONL 文件"),
    format: ReportFormat = typer.Option(
        ReportFormat.TABLE, "--format", "-f", help="输出格式: table | markdown"
    ),
    recheck: bool = typer.Option(
        False, "--revalidate", help="重新运行反例与缺陷记录，核对判定与见证"
    ),
) -> None:
    """汇总扫描结果：按检查与判定计数，并列出反例与缺陷.

    Examples:
        herfam report results/chvatal.jsonl
        herfam report results/chvatal.jsonl -f markdown
        herfam report results/chvatal.jsonl --revalidate
    """
    with _cli_errors():
        records, summary = read_report(file)
    reporter = ReportGenerator(records, summary)
    if format is ReportFormat.MARKDOWN:
        typer.echo(reporter.generate_markdown())
    else:
        console.print(reporter.generate_table())
        problems = reporter.problems()
        if problems:
            lines = [f"- `{r.check_name}` `{r.family}` **{r.verdict.value}**" for r in problems]
            console.print(Markdown("\n".join(lines)))
        if summary is not None:
            console.print(f"总数 {summary.total}，退出码 {summary.exit_code}")
    if recheck:
        _revalidate_problems(reporter.problems())


@app.command(name="config")
def config_cmd(
    action: ConfigAction = typer.Argument(..., help="show | validate"),
    config_file: Path = typer.Argument(..., help="扫描配置（key: value）"),
) -> None:
    """查看或校验扫描配置.

    Examples:
        herfam config show configs/sums.yaml
        herfam config validate configs/sums.yaml
    """
    loader = ConfigLoader(config_file, get_settings())
    if action is ConfigAction.VALIDATE:
        is_valid, message = loader.validate()
        if not is_valid:
            err_console.print(f"[red]{message}[/red]")
            raise typer.Exit(EXIT_ERROR)
        console.print(f"[green]{message}[/green]")
        return
    with _cli_errors():
        sweep = loader.load()
    console.print(sweep.model_dump())


if __name__ == "__main__":
    app()
