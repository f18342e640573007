from __future__ import annotations

import uuid
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import typer

from choicedict.application.harness.mappers.report_mapper import ReportMapper
from choicedict.core.config.dictionary_config import BPolicy, DictionaryConfig, Endianness, Mode
from choicedict.core.config.logging import configure_logging, get_logger, run_id_ctx_var
from choicedict.core.di.container import Container
from choicedict.core.errors import ChoiceDictError

app = typer.Typer(help="CLI para reproduzir traces, medir acessos e descrever o espaço do dicionário de escolha.")
container = Container()
logger = get_logger(__name__)


@contextmanager
def error_handler() -> Iterator[None]:
    """Converte ChoiceDictError em código de saída (1 divergência, 2 trace malformada)."""
    try:
        yield
    except ChoiceDictError as e:
        logger.error(f"Comando falhou: {e.message}")
        typer.echo(f"erro: {e.message}", err=True)
        raise typer.Exit(e.exit_code)


def build_config(mode: Mode, b_policy: BPolicy, endianness: Endianness) -> DictionaryConfig:
    return DictionaryConfig.from_mode(
        mode,
        b_policy,
        word_width=container.settings().word_width,
        endianness=endianness,
    )


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Nível de log (padrão: CHOICEDICT_LOG_LEVEL)"),
) -> None:
    configure_logging(log_level or container.settings().log_level)
    token = run_id_ctx_var.set(uuid.uuid4().hex)
    ctx.call_on_close(lambda: run_id_ctx_var.reset(token))


@app.command()
def replay(
    trace: Path = typer.Option(..., "--trace", "-t", help="Arquivo de trace (uma operação por linha)"),
    n: Optional[int] = typer.Option(None, "--n", help="Universo; sobrepõe o cabeçalho universe=…"),
    b_policy: BPolicy = typer.Option(BPolicy.TWO_W, "--b-policy", help="Política de b: 2w, w ou w/2"),
    mode: Mode = typer.Option(Mode.HIDDEN, "--mode", help="hidden, plain ou self-contained"),
    endianness: Endianness = typer.Option(Endianness.BIG, "--endianness", help="Cabeçalho γ′ no modo self-contained"),
    fill: Optional[str] = typer.Option(None, "--fill", help="zeros, ones, random:SEED ou crafted"),
    seed: int = typer.Option(0, "--seed", help="Seed do preenchimento crafted"),
    machine_readable: bool = typer.Option(False, "--machine-readable", help="Saída JSON"),
):
    """Executa a trace contra o oráculo; sai com 1 na primeira divergência."""
    with error_handler():
        try:
            text = trace.read_text(encoding="utf-8")
        except OSError as e:
            typer.echo(f"erro: não foi possível ler {trace}: {e}", err=True)
            raise typer.Exit(2)
        config = build_config(mode, b_policy, endianness)
        use_case = container.replay_trace_use_case()
        report = use_case.execute(text, config, fill or container.settings().default_fill, n=n, seed=seed)
    if machine_readable:
        typer.echo(ReportMapper.differential_to_json(report))
    else:
        typer.echo(ReportMapper.differential_to_text(report))
    if not report.ok:
        raise typer.Exit(1)


@app.command()
def bench(
    n: Optional[List[int]] = typer.Option(None, "--n", help="Tamanho do universo (repetível)"),
    b_policy: BPolicy = typer.Option(BPolicy.TWO_W, "--b-policy", help="Política de b: 2w, w ou w/2"),
    mode: Mode = typer.Option(Mode.HIDDEN, "--mode", help="hidden, plain ou self-contained"),
    endianness: Endianness = typer.Option(Endianness.BIG, "--endianness", help="Cabeçalho γ′ no modo self-contained"),
    ops: Optional[int] = typer.Option(None, "--ops", help="Operações por n"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed da trace"),
    fill: Optional[str] = typer.Option(None, "--fill", help="zeros, ones, random:SEED ou crafted"),
    machine_readable: bool = typer.Option(False, "--machine-readable", help="Saída JSON"),
):
    """Mede acessos por operação e confere o espaço para cada n."""
    settings = container.settings()
    with error_handler():
        config = build_config(mode, b_policy, endianness)
        use_case = container.run_benchmark_use_case()
        reports, check = use_case.execute(
            n or settings.bench_n_list,
            config,
            ops if ops is not None else settings.bench_ops,
            seed if seed is not None else settings.bench_seed,
            fill or settings.default_fill,
        )
    if machine_readable:
        typer.echo(ReportMapper.bench_to_json(reports, check))
    else:
        typer.echo(ReportMapper.bench_to_text(reports, check))
    if not check.ok or not all(r.footprint_ok for r in reports):
        raise typer.Exit(1)


@app.command()
def space(
    n: int = typer.Option(..., "--n", help="Tamanho do universo"),
    b_policy: BPolicy = typer.Option(BPolicy.TWO_W, "--b-policy", help="Política de b: 2w, w ou w/2"),
    mode: Mode = typer.Option(Mode.HIDDEN, "--mode", help="hidden, plain ou self-contained"),
    endianness: Endianness = typer.Option(Endianness.BIG, "--endianness", help="Cabeçalho γ′ no modo self-contained"),
    machine_readable: bool = typer.Option(False, "--machine-readable", help="Saída JSON"),
):
    """Mostra os trechos de bits (cabeçalho, barreira, A, cauda) e o total."""
    with error_handler():
        config = build_config(mode, b_policy, endianness)
        report = container.describe_space_use_case().execute(n, config)
    if machine_readable:
        typer.echo(ReportMapper.space_to_json(report))
    else:
        typer.echo(ReportMapper.space_to_text(report))


if __name__ == "__main__":
    app()
