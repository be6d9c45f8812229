"""verify: check a representation file."""
from pathlib import Path

import click

from haemers.constants.cli import CheckStatus, ExitCode
from haemers.services.representation import failing_vertices, verify
from haemers.utils.graph_specs import load_representation
from haemers.utils.reporting import Report, exit_status


@click.command("verify")
@click.option("--rep", "rep_path", type=click.Path(dir_okay=False), required=True)
@exit_status
def command(rep_path):
    """Verify a dual (n, d)-representation; exit 1 if it is invalid."""
    report = Report("verify", rep=rep_path)
    rep = load_representation(Path(rep_path))
    result = verify(rep)
    report.line(f"graph: |V|={rep.graph.order} |E|={rep.graph.edge_count} field={rep.field}")
    report.line(f"n={result.ambient} d={result.local_dim} value={rep.value}")
    for check in result.vertices:
        status = CheckStatus.OK if check.ok else CheckStatus.FAIL
        report.line(f"vertex {check.vertex} dim={check.dim} meet={check.intersection_dim} {status}")
    report.line(f"total_span={result.total_span_dim}")
    if not result.valid:
        report.line(f"failing={' '.join(failing_vertices(result))}")
    report.line(f"valid={'true' if result.valid else 'false'}")
    report.emit()
    return ExitCode.OK if result.valid else ExitCode.FALSE
