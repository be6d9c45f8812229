"""Constants for the command line surface."""


class ExitCode:
    """Process exit statuses."""
    OK = 0
    FALSE = 1
    USAGE = 2
    INCONCLUSIVE = 3


class Verdict:
    """Search verdicts as printed in reports."""
    FOUND = "found"
    NOT_FOUND = "not found"
    INCONCLUSIVE = "inconclusive"


class CheckStatus:
    """Identity check outcomes."""
    OK = "OK"
    FAIL = "FAIL"
