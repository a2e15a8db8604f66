"""Python bindings for the overshoot-chain laboratory."""

import json

from ._core import (  # noqa: F401
    ConvergenceError,
    DegenerateError,
    DomainError,
    UsageError,
    classify,
    critical_exponent,
    critical_moment,
    down_cdf,
    down_density,
    log_drift,
    orbit,
    overshoot_orbit,
    product_moment,
    quadrature_moment,
    run_experiment,
    sample_up,
    simulate_chain,
    up_cdf,
    up_density,
    up_moment,
    up_quantile,
)


def run(command, *, seed=42, format="json", threads=0, **parameters):
    """Run a CLI command; JSON reports are returned parsed, CSV as text."""
    body = run_experiment(command, json.dumps(parameters), seed, format, threads)
    return json.loads(body) if format == "json" else body
