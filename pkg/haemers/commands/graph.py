"""graph: describe a graph spec and optionally write it out."""
from pathlib import Path

import click

from haemers.constants.cli import ExitCode
from haemers.core.config import settings
from haemers.services.graphs import clique_number
from haemers.utils.graph_specs import resolve_graph
from haemers.utils.reporting import Report, exit_status
from haemers.utils.text_formats import format_graph, write_text


@click.command("graph")
@click.option("--graph", "graph_spec", required=True, help="Graph spec or graph file.")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the graph file here.")
@exit_status
def command(graph_spec, out):
    """Print order, size, degree sequence and clique number."""
    report = Report("graph", graph=graph_spec, out=out)
    graph = resolve_graph(graph_spec)
    report.line(f"|V|={graph.order} |E|={graph.edge_count}")
    report.line(f"degrees={' '.join(map(str, sorted(graph.degrees(), reverse=True)))}")
    if graph.order <= settings.clique_max_vertices:
        report.line(f"omega={clique_number(graph)}")
    if out:
        write_text(Path(out), format_graph(graph))
        report.line(f"wrote {out}")
    report.emit()
    return ExitCode.OK
