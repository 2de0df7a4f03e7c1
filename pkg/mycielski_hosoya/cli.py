#!/usr/bin/env python3
#
# cli.py
#
# Command-line utility for Hosoya polynomials, Mycielskian graphs and distance indices
#

import json
import logging
import os
import sys
from typing import NoReturn, Optional

import click
from tabulate import tabulate

from .constants import (
    DEFAULT_COUNT,
    DEFAULT_FAMILY_MAX,
    DEFAULT_MAX_N,
    DEFAULT_SEED,
    ERR_OVERFLOW,
    ERR_USAGE,
    ERR_VERIFY,
    EXIT_OK,
    VERBOSE_ENV,
)
from .constructions import generate, mycielskian, parse_generator_spec
from .edgelist import format_edge_list, read_edge_list, write_edge_list
from .errors import ArithmeticOverflowError, GraphError, PreconditionError, SpecGrammarError
from .graph import Graph
from .hosoya import hosoya
from .indices import index_report
from .polynomial import format_decimal, render_rational
from .verify import VerifyConfig, verify as run_verify

log = logging.getLogger(__name__)


# ============================================================
# 辅助函数
# ============================================================

def configure_logging(verbose: int) -> None:
    """默认 WARNING；-v 或环境变量为 INFO，-vv 为 DEBUG"""
    if os.environ.get(VERBOSE_ENV, "").lower() in ("1", "true", "yes"):
        verbose = max(verbose, 1)
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format='%(asctime)s [%(levelname)s] %(message)s',
        datefmt='%H:%M:%S',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


def fail(message: str, code: int) -> NoReturn:
    click.echo(message, err=True)
    sys.exit(code)


def load_graph(source: tuple) -> tuple[Graph, str]:
    """
    解析输入: "gen SPEC" 或边列表文件路径

    Returns:
        (graph, label)
    """
    if len(source) == 2 and source[0] == "gen":
        text = source[1]
        try:
            return generate(parse_generator_spec(text)), text
        except SpecGrammarError as e:
            fail(f"Invalid generator spec: {e}\n  {e.text or text}\n  {' ' * e.position}^", ERR_USAGE)
    if len(source) == 1:
        path = source[0]
        try:
            return read_edge_list(path), path
        except GraphError as e:
            fail(f"Cannot read {path}: {e}", ERR_USAGE)
        except OSError as e:
            fail(f"Cannot read {path}: {e.strerror}", ERR_USAGE)
    fail("Input must be 'gen SPEC' or an edge-list file path", ERR_USAGE)


def save_edge_list(graph: Graph, output: str, comment: str) -> None:
    try:
        write_edge_list(graph, output, comment=comment)
    except OSError as e:
        fail(f"Cannot write {output}: {e.strerror}", ERR_USAGE)


def emit(text: str, output: Optional[str]) -> None:
    """写到 output 文件，未指定时写到标准输出"""
    if output is None:
        click.echo(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text if text.endswith("\n") else text + "\n")
    except OSError as e:
        fail(f"Cannot write {output}: {e.strerror}", ERR_USAGE)
    log.info(f"Wrote {output}")


# ============================================================
# 命令
# ============================================================

@click.group()
@click.option('--verbose', '-v', count=True, help="Log progress to stderr (-vv for debug)")
def cli(verbose):
    """mycielski-hosoya - Hosoya polynomials, Mycielskian graphs and distance-based indices

    Graph input is either 'gen SPEC' or an edge-list file path. Note that
    path:N is the path of length N, i.e. N + 1 vertices.
    """
    configure_logging(verbose)


# 'hosoya' subcommand
@cli.command(name="hosoya")
@click.argument('source', nargs=-1, required=True)
@click.option('--json', 'as_json', is_flag=True, help="Print a JSON object only")
@click.option('--output', '-o', type=click.Path(dir_okay=False), help="Write to file instead of stdout")
def hosoya_cmd(source, as_json, output):
    """Print the Hosoya polynomial H(G, x)"""
    graph, label = load_graph(source)
    H = hosoya(graph)
    log.info(f"[{label}] H(G, x) = {H}")
    if as_json:
        emit(json.dumps({"polynomial": str(H), "coefficients": H.to_json()}), output)
    else:
        emit(f"{H}\n{json.dumps(H.to_json())}", output)


# 'mycielskian' subcommand
@cli.command(name="mycielskian")
@click.argument('source', nargs=-1, required=True)
@click.option('--json', 'as_json', is_flag=True, help="Print a JSON summary")
@click.option('--output', '-o', type=click.Path(dir_okay=False), help="Edge-list file for mu(G)")
def mycielskian_cmd(source, as_json, output):
    """Build the Mycielskian mu(G) and write it as an edge list

    Vertices of G keep ids 1..n, shadow vertex u_i is n + i and the hub w is 2n + 1.
    """
    graph, label = load_graph(source)
    result = mycielskian(graph)
    comment = f"mu({label})"
    if output is None:
        click.echo(format_edge_list(result, comment=comment), nl=False)
    else:
        save_edge_list(result, output, comment)
        if as_json:
            click.echo(json.dumps({
                "vertex_count": result.vertex_count,
                "edge_count": result.edge_count,
                "output": output,
            }))
        else:
            click.echo(f"Wrote mu({label}) to {output}: {result.vertex_count} vertices, {result.edge_count} edges")


# 'indices' subcommand
@cli.command()
@click.argument('source', nargs=-1, required=True)
@click.option('--vrc', is_flag=True, help="Include vertex residual closeness")
@click.option('--json', 'as_json', is_flag=True, help="Print the JSON report only")
@click.option('--decimal', is_flag=True, help="Append 6-digit decimal approximations")
@click.option('--output', '-o', type=click.Path(dir_okay=False), help="Write to file instead of stdout")
def indices(source, vrc, as_json, decimal, output):
    """Compute every distance-based index of G exactly"""
    graph, label = load_graph(source)
    report = index_report(graph, include_vrc=vrc)
    if report.betweenness_centrality is None:
        click.echo("Notice: graph is disconnected, betweenness centrality omitted", err=True)

    try:
        if as_json:
            data = report.to_json()
            if decimal:
                data["decimal"] = {
                    name: format_decimal(value)
                    for name, value in report.rows()
                    if value is not None
                }
            emit(json.dumps(data, indent=2), output)
            return

        header = ["Index", "Exact"] + (["Decimal"] if decimal else [])
        body = []
        for name, value in report.rows():
            if value is None:
                row = [name, "-"] + (["-"] if decimal else [])
            else:
                row = [name, render_rational(value)] + ([format_decimal(value)] if decimal else [])
            body.append(row)
        emit(f"Graph: {label} (n={graph.vertex_count}, m={graph.edge_count})\n"
             + tabulate(body, header, stralign='right', disable_numparse=True), output)
    except ArithmeticOverflowError as e:
        fail(f"Arithmetic overflow: {e}", ERR_OVERFLOW)


# 'gen' subcommand
@cli.command()
@click.argument('spec')
@click.option('--json', 'as_json', is_flag=True, help="Print the graph as JSON")
@click.option('--output', '-o', type=click.Path(dir_okay=False), help="Edge-list file")
def gen(spec, as_json, output):
    """Generate a named graph: path:N cycle:N star:N complete:N kbip:N,M join:SPEC+SPEC"""
    graph, _ = load_graph(("gen", spec))
    if as_json:
        emit(json.dumps({
            "spec": spec,
            "vertex_count": graph.vertex_count,
            "edge_count": graph.edge_count,
            "edges": [list(e) for e in graph.sorted_edges()],
        }), output)
    elif output is None:
        click.echo(format_edge_list(graph, comment=spec), nl=False)
    else:
        save_edge_list(graph, output, spec)


# 'verify' subcommand
@cli.command()
@click.option('--seed', type=int, default=DEFAULT_SEED, show_default=True, help="Random corpus seed")
@click.option('--count', type=click.IntRange(min=0), default=DEFAULT_COUNT, show_default=True,
              help="Number of random connected graphs")
@click.option('--max-n', type=click.IntRange(min=2), default=DEFAULT_MAX_N, show_default=True,
              help="Largest random graph order")
@click.option('--family-max', type=click.IntRange(min=2), default=DEFAULT_FAMILY_MAX, show_default=True,
              help="Largest named-family parameter")
@click.option('--workers', type=click.IntRange(min=1), default=None, help="Worker threads")
@click.option('--json', 'as_json', is_flag=True, help="Print the JSON report")
@click.option('--output', '-o', type=click.Path(dir_okay=False), help="Write to file instead of stdout")
def verify(seed, count, max_n, family_max, workers, as_json, output):
    """Check every closed form against brute-force distance oracles"""
    config = VerifyConfig(seed=seed, count=count, max_n=max_n, family_max=family_max, workers=workers)
    report = run_verify(config)
    emit(report.render_json() if as_json else report.render_text(), output)

    if report.failed:
        counterexample = report.first_counterexample()
        click.echo(
            f"Verification failed at instance #{counterexample.instance_id} "
            f"({counterexample.label}): {counterexample.detail}",
            err=True,
        )
        click.echo(counterexample.edge_list, err=True, nl=False)
        sys.exit(ERR_VERIFY)


def run():
    """Entry point for python -m mycielski_hosoya"""
    try:
        cli.main(standalone_mode=False)
        sys.exit(EXIT_OK)
    except click.exceptions.Abort:
        fail("Aborted", ERR_USAGE)
    except click.ClickException as e:
        # click 用法错误默认退出码为 2，统一为 ERR_USAGE
        e.show()
        sys.exit(ERR_USAGE)
    except PreconditionError as e:
        fail(f"Precondition violated: {e}", ERR_USAGE)
    except ArithmeticOverflowError as e:
        fail(f"Arithmetic overflow: {e}", ERR_OVERFLOW)
    except Exception as e:
        log.error(f"Fatal error: {e}", exc_info=True)
        sys.exit(ERR_USAGE)


if __name__ == "__main__":
    run()
