"""formulas: closed-form Mycielski bounds."""
from fractions import Fraction

import click

from haemers.constants.cli import ExitCode
from haemers.core.exceptions import ParseError
from haemers.services.bounds import clique_lower_bound, lift_upper_bound, tardif_chi, theta_mycielski2
from haemers.utils.reporting import Report, exit_status


def _rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{token!r} is not a rational number")


@click.command("formulas")
@click.option("--h", "h", required=True, help="Value of G (rational, e.g. 5/2).")
@click.option("--r", "r", type=int, required=True, help="Number of Mycielski levels.")
@click.option("--theta", default=None, help="Lovasz theta of G, for the M_2 formula.")
@exit_status
def command(h, r, theta):
    """Evaluate the lift bound, the fractional chromatic formula and theta of M_2."""
    report = Report("formulas", h=h, r=r, theta=theta)
    value = _rational(h)
    report.line(f"lift_upper_bound={lift_upper_bound(value, r)}")
    report.line(f"tardif_chi={tardif_chi(value, r)}")
    if value.denominator == 1:
        report.line(f"clique_lower_bound={clique_lower_bound(int(value), r)}")
    if theta is not None:
        report.line(f"theta_mycielski2={theta_mycielski2(_rational(theta)):.12f}")
    report.emit()
    return ExitCode.OK
