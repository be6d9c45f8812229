"""bounds: the recursion table of M_r(K_m) and its closed-form bound."""
import click

from haemers.constants.cli import CheckStatus, ExitCode
from haemers.services.bounds import (
    clique_lower_bound,
    final_inequality,
    lemma2_residual,
    lemma3_identity_check,
    recursion_table,
    table_lines,
)
from haemers.utils.reporting import Report, exit_status

IDENTITY_MIN_R = 4


@click.command("bounds")
@click.option("--m", "m", type=int, required=True, help="Clique size of K_m.")
@click.option("--r", "r", type=int, required=True, help="Number of Mycielski levels.")
@exit_status
def command(m, r):
    """Print the recursion table, the identity checks and the lower bound."""
    report = Report("bounds", m=m, r=r)
    table = recursion_table(m, r)
    for line in table_lines(table):
        report.line(line)
    report.line(f"final: {final_inequality(table)} <= 0")
    # identities are checked on at least the r = 4 table
    depth = max(r, IDENTITY_MIN_R)
    lemma2 = all(form.is_zero for form in lemma2_residual(recursion_table(m, depth)))
    lemma3 = lemma3_identity_check(m, depth)
    report.line(f"Lemma2 {CheckStatus.OK if lemma2 else CheckStatus.FAIL}")
    report.line(f"Lemma3 {CheckStatus.OK if lemma3 else CheckStatus.FAIL}")
    report.line(f"lower={clique_lower_bound(m, r)}")
    report.emit()
    return ExitCode.OK if lemma2 and lemma3 else ExitCode.FALSE
