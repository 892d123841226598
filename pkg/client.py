# Copyright (c) Opendatalab. All rights reserved.
import json
import sys
from functools import wraps

import click
from loguru import logger

from common import do_analyze, do_check, do_decompose, do_presentation, do_trees, presentation_styles
from src.complex.models import VerdictStatus
from src.decompose.models import DecompositionTree
from src.file.handler import load_graph
from src.file.manager import save_json, validate_document
from src.file.render import PRESENTATION_FORMATS, emit_decomposition, emit_presentation, render_report
from src.task.processor import process_batch
from src.utils.errors import BBError, BudgetExhaustedError
from src.version import __version__


def handle_errors(func):
    """库代码只抛异常，这里统一转换为退出码"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BBError as e:
            logger.debug(f"{type(e).__name__}: {e}")
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)
    return wrapper


def _echo_json(data):
    click.echo(json.dumps(data, ensure_ascii=False, indent=2))


input_file = click.argument('path', type=click.Path(exists=True, dir_okay=False))
format_option = click.option(
    '-f',
    '--format',
    'fmt',
    type=click.Choice(['edges', 'dot']),
    help='input format; guessed from the file suffix when omitted',
    default=None,
)
budget_option = click.option(
    '--budget',
    type=click.IntRange(min=1),
    help='elementary-move budget of the simple-connectivity check (env BB_BUDGET)',
    default=None,
)
cap_option = click.option(
    '--cap',
    type=click.IntRange(min=1),
    help='upper limit on spanning trees examined by searches (env BB_BUDGET)',
    default=None,
)
tree_option = click.option(
    '-t',
    '--tree',
    'tree_text',
    type=str,
    help='explicit spanning tree, e.g. "e1,e2,e4" or "v1-v2,v2-v3"',
    default=None,
)


@click.group()
@click.version_option(__version__,
                      '--version',
                      '-v',
                      help='display the version and exit')
@click.option(
    '--log-level',
    type=click.Choice(['TRACE', 'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']),
    help='log level of the stderr sink',
    default='WARNING',
)
def cli(log_level):
    """Bestvina-Brady groups of flag complexes: presentations, favourable trees and splittings."""
    logger.remove()
    logger.add(sys.stderr, level=log_level)


@cli.command()
@click.argument('path', type=click.Path(exists=True), required=False)
@format_option
@budget_option
@cap_option
@click.option('--batch', 'batch_dir', type=click.Path(exists=True, file_okay=False),
              help='analyze every .graph/.dot file of a directory concurrently', default=None)
@click.option('-o', '--output', 'output_dir', type=click.Path(),
              help='output directory of batch mode (env BB_OUTPUT_DIR)', default=None)
@click.option('-j', '--jobs', type=int, help='concurrent batch workers', default=4)
@click.option('--json', 'as_json', is_flag=True, help='print the report as JSON')
@handle_errors
def analyze(path, fmt, budget, cap, batch_dir, output_dir, jobs, as_json):
    """Connectivity, flag complex, simple connectivity, favourability and family membership."""
    if batch_dir:
        summary = process_batch(batch_dir, output_dir, budget, cap, jobs)
        if as_json:
            _echo_json(summary)
        else:
            click.echo(f"{summary['completed']}/{summary['total']} analysed, {summary['failed']} failed")
        sys.exit(0 if summary['failed'] == 0 else 1)
    if path is None:
        raise click.UsageError("give a graph file or --batch DIR")
    report = do_analyze(load_graph(path, fmt), budget=budget, cap=cap)
    if as_json:
        _echo_json(report)
    else:
        click.echo(render_report(report), nl=False)


@cli.command()
@input_file
@format_option
@click.option('-s', '--style', type=click.Choice(presentation_styles), default='ps',
              help='dl: Dicks-Leary (one generator per edge); ps: spanning-tree generators')
@tree_option
@click.option('-o', '--output-format', 'output_format', type=click.Choice(list(PRESENTATION_FORMATS)),
              default='plain')
@budget_option
@cap_option
@handle_errors
def presentation(path, fmt, style, tree_text, output_format, budget, cap):
    """Print a presentation of the Bestvina-Brady group."""
    p = do_presentation(load_graph(path, fmt), style, tree_text, budget, cap)
    if output_format == 'json':
        validate_document(p.to_dict(), "presentation")
    click.echo(emit_presentation(p, output_format), nl=False)


@cli.command()
@input_file
@format_option
@tree_option
@click.option('--json', 'json_path', type=click.Path(dir_okay=False),
              help='also write the decomposition as JSON to this file', default=None)
@budget_option
@cap_option
@handle_errors
def decompose(path, fmt, tree_text, json_path, budget, cap):
    """Iterated amalgamated-product splitting, or the RAAG witness of a favourable graph."""
    result = do_decompose(load_graph(path, fmt), tree_text, budget, cap)
    if isinstance(result, DecompositionTree):
        document = result.to_dict()
        validate_document(document, "decomposition")
        click.echo(emit_decomposition(result), nl=False)
    else:
        document = result.to_dict()
        click.echo("H = A_Γ′ (favourable graph)")
        click.echo(emit_presentation(result.presentation(), "plain"), nl=False)
    if json_path:
        save_json(document, json_path)


@cli.command()
@input_file
@format_option
@click.option('-n', '--enumerate', 'enumerate_count', type=int, default=0,
              help='list the first N spanning trees in lexicographic order')
@click.option('--optimize', is_flag=True, help='run every spanning-tree search mode')
@cap_option
@click.option('--json', 'as_json', is_flag=True, help='print the report as JSON')
@handle_errors
def trees(path, fmt, enumerate_count, optimize, cap, as_json):
    """Spanning-tree statistics and optimal trees."""
    report = do_trees(load_graph(path, fmt), enumerate_count, optimize, cap)
    if as_json:
        _echo_json(report)
        return
    click.echo(f"spanning trees: {report['spanning_trees']}")
    for item in report.get("trees", []):
        click.echo(f"  {','.join(item['tree'])}  unfavourable={item['unfavourable']}")
    for mode, result in report.get("optimize", {}).items():
        best = ','.join(result['best_tree']) if result['best_tree'] else '-'
        click.echo(f"{mode}: tree={best} unfavourable={result['unfavourable_count']} "
                   f"internal={result['unfavourable_internal_count']} exhaustive={result['exhaustive']}")


@cli.command()
@input_file
@format_option
@click.option('--simply-connected', 'simply_connected', is_flag=True,
              help='decide simple connectivity of the flag complex (the default and only check)')
@budget_option
@click.option('--json', 'as_json', is_flag=True, help='print the verdict with its certificate as JSON')
@handle_errors
def check(path, fmt, simply_connected, budget, as_json):
    """Decide whether the flag complex is simply connected."""
    verdict = do_check(load_graph(path, fmt), budget)
    if as_json:
        _echo_json(verdict.to_dict())
    else:
        click.echo(verdict.summary())
    if verdict.status is VerdictStatus.UNKNOWN:
        raise BudgetExhaustedError("simple connectivity undecided within the budget")


if __name__ == '__main__':
    cli()
