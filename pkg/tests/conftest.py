from __future__ import annotations

import os
from fractions import Fraction

from hypothesis import HealthCheck, settings

from qjstirling.exactscalars import Laurent, evaluate

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def flat(x, prefix=()):
    """Laurent tower -> {exponent tuple (outer first): Fraction}."""
    if not isinstance(x, Laurent):
        return {prefix: Fraction(x)} if x else {}
    out = {}
    for e, c in x.terms.items():
        out.update(flat(c, prefix + (e,)))
    return out


def at(f, point):
    """Evaluate a rational function in the base variable at a rational point."""
    return Fraction(evaluate(f, point))


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance as acc
    except ImportError:
        return
    if not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for c in acc.CRITERIA:
        if c.number in acc.RESULTS:
            terminalreporter.write_line(acc.summary_line(c, *acc.RESULTS[c.number]))
