"""search: exhaustive existence of a dual (n, d)-representation over GF(p)."""
from pathlib import Path

import click

from haemers.constants.cli import ExitCode, Verdict
from haemers.core.exceptions import BudgetExhausted
from haemers.services.oracle import exists_representation
from haemers.utils.graph_specs import resolve_graph, save_representation
from haemers.utils.reporting import Report, exit_status


@click.command("search")
@click.option("--graph", "graph_spec", required=True, help="Graph spec or graph file.")
@click.option("--p", "p", type=int, required=True, help="Prime field size.")
@click.option("--n", "n", type=int, required=True, help="Ambient dimension.")
@click.option("--d", "d", type=int, required=True, help="Local dimension.")
@click.option("--budget", type=int, default=None, help="Search node budget.")
@click.option("--symmetric", is_flag=True, help="Fix the first vertex to the least candidate subspace.")
@click.option("--witness", type=click.Path(dir_okay=False), help="Write a found witness here.")
@exit_status
def command(graph_spec, p, n, d, budget, symmetric, witness):
    """Decide by exhaustive search; exit 0 found, 1 not found, 3 inconclusive."""
    report = Report(
        "search", graph=graph_spec, p=p, n=n, d=d, budget=budget, symmetric=symmetric, witness=witness
    )
    graph = resolve_graph(graph_spec)
    try:
        result = exists_representation(graph, p, n, d, node_budget=budget, symmetric=symmetric)
    except BudgetExhausted as exc:
        report.line(f"verdict={Verdict.INCONCLUSIVE} nodes={exc.nodes}")
        report.emit()
        return ExitCode.INCONCLUSIVE
    if not result.found:
        report.line(f"verdict={Verdict.NOT_FOUND} nodes={result.nodes}")
        report.emit()
        return ExitCode.FALSE
    report.line(f"verdict={Verdict.FOUND} nodes={result.nodes} value={result.witness.value}")
    if witness:
        save_representation(result.witness, Path(witness))
        report.line(f"wrote {witness}")
    report.emit()
    return ExitCode.OK
