"""Deterministic command reports with a separate timing footer."""
import functools
import logging
import time
from typing import Any, Callable, List

import click

from haemers import __version__
from haemers.constants.cli import ExitCode
from haemers.core.exceptions import HaemersError

logger = logging.getLogger(__name__)

TIMING_RULE = "--- timing ---"


class Report:
    """
    Collects the comparable part of a command's output.

    The header echoes the version and every parameter; ``emit`` appends the
    elapsed time after ``TIMING_RULE`` so everything above it is stable
    across runs.
    """

    def __init__(self, command: str, **params: Any):
        self.started = time.perf_counter()
        self.lines: List[str] = [f"haemers {__version__} {command}"]
        self.lines.extend(f"  {key}={params[key]}" for key in sorted(params))

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self) -> None:
        elapsed = time.perf_counter() - self.started
        click.echo("\n".join(self.lines))
        click.echo(TIMING_RULE)
        click.echo(f"elapsed={elapsed:.3f}s")


def exit_status(func: Callable[..., int]) -> Callable[..., None]:
    """
    Turn a command's returned status and any HaemersError into the process
    exit code.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            status = func(*args, **kwargs)
        except HaemersError as exc:
            logger.error(f"{func.__name__} failed: {exc.detail}")
            click.echo(f"error: {exc.detail}", err=True)
            raise click.exceptions.Exit(exc.exit_code)
        if status:
            raise click.exceptions.Exit(status)
        return ExitCode.OK

    return wrapper
