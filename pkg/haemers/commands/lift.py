"""lift: build the representation of M_r(G) from one of G."""
import logging
from pathlib import Path
from typing import Optional

import click

from haemers.constants.cli import ExitCode
from haemers.core.exceptions import BadParameter, FieldMismatch
from haemers.models.field import FieldSpec
from haemers.models.representation import DualRepresentation
from haemers.services.lift import assert_lift_dimensions, class_dims, lift, lift_plan
from haemers.services.representation import compress, standard_complete_rep
from haemers.utils.graph_specs import load_representation, resolve_graph, save_representation
from haemers.utils.reporting import Report, exit_status

logger = logging.getLogger(__name__)


def _input_representation(
    graph_spec: Optional[str], rep_path: Optional[str], field_token: Optional[str]
) -> DualRepresentation:
    if rep_path:
        rep = load_representation(Path(rep_path))
        if field_token is not None and FieldSpec.parse(field_token) != rep.field:
            raise FieldMismatch(f"--field {field_token} does not match the representation field {rep.field}")
        return rep
    if not graph_spec:
        raise BadParameter("give --rep FILE or a complete-graph --graph spec")
    graph = resolve_graph(graph_spec)
    if graph.edge_count != graph.order * (graph.order - 1) // 2:
        raise BadParameter(f"{graph_spec} is not complete; pass its representation with --rep")
    return standard_complete_rep(graph.order, FieldSpec.parse(field_token or "2"))


@click.command("lift")
@click.option("--graph", "graph_spec", help="Complete graph spec (k<m>) used with its standard representation.")
@click.option("--rep", "rep_path", type=click.Path(dir_okay=False), help="Representation file of G.")
@click.option("--field", "field_token", help="Prime p or Q (default 2 with --graph).")
@click.option("--r", "r", type=int, required=True, help="Number of Mycielski levels.")
@click.option("--out", type=click.Path(dir_okay=False), help="Where to write the lifted representation.")
@click.option("--no-check", is_flag=True, help="Skip the full verification of the lifted representation.")
@exit_status
def command(graph_spec, rep_path, field_token, r, out, no_check):
    """Lift a dual (n, d)-representation of G to M_r(G)."""
    report = Report(
        "lift", graph=graph_spec, rep=rep_path, field=field_token, r=r, out=out, no_check=no_check
    )
    rep = _input_representation(graph_spec, rep_path, field_token)
    report.line(f"input: |V|={rep.graph.order} n={rep.ambient} d={rep.local_dim} value={rep.value}")
    lifted = lift(rep, r, check=not no_check)
    if r >= 2 and rep.graph.edge_count:
        base = compress(rep)
        plan = lift_plan(base.ambient, base.local_dim, r)
        report.line(plan.summary())
        for name, dims in class_dims(assert_lift_dimensions(lifted, plan)):
            report.line(f"class {name}: dim {' '.join(map(str, dims))}")
        report.line(f"N={plan.N} D={plan.D} value={lifted.value}")
    else:
        report.line(f"N={lifted.ambient} D={lifted.local_dim} value={lifted.value}")
    report.line(f"lifted: |V|={lifted.graph.order} ambient={lifted.ambient}")
    if out:
        graph_path = save_representation(lifted, Path(out))
        report.line(f"wrote {out} (graph {graph_path.name})")
    report.emit()
    return ExitCode.OK
