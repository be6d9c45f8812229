"""chif: exact fractional chromatic number."""
import click

from haemers.constants.cli import ExitCode
from haemers.core.config import settings
from haemers.services.chif import fractional_coloring
from haemers.services.graphs import clique_number
from haemers.utils.graph_specs import resolve_graph
from haemers.utils.reporting import Report, exit_status


@click.command("chif")
@click.option("--graph", "graph_spec", required=True, help="Graph spec or graph file.")
@click.option("--witness", is_flag=True, help="Print the optimal weighting of independent sets.")
@exit_status
def command(graph_spec, witness):
    """Solve the covering LP exactly."""
    report = Report("chif", graph=graph_spec, witness=witness)
    graph = resolve_graph(graph_spec)
    solution = fractional_coloring(graph)
    report.line(f"|V|={graph.order} |E|={graph.edge_count} columns={len(solution.weights)}")
    if graph.order <= settings.clique_max_vertices:
        report.line(f"omega={clique_number(graph)}")
    report.line(f"chi_f={solution.value}")
    if witness:
        for column, weight in solution.weights.items():
            if weight:
                report.line(f"weight {{{','.join(map(str, column))}}} = {weight}")
    report.emit()
    return ExitCode.OK
