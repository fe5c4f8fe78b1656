"""Rewriting codes for flash-like storage."""

import json

from ._core import (
    FlashcodesError,
    __version__,
    max_r,
    optimal_game_value,
    run,
    ub_complete,
    ub_trivial,
)

__all__ = [
    "FlashcodesError",
    "__version__",
    "bounds",
    "worked_example",
    "max_r",
    "optimal_game_value",
    "robust_eval",
    "run",
    "simulate",
    "ub_complete",
    "ub_trivial",
]


def _checked(subcommand, **options):
    code, out, err = run(subcommand, **options)
    if code != 0:
        raise FlashcodesError(err.strip() or f"{subcommand} exited with {code}")
    return out


def bounds(n, q, L, **options):
    """All closed-form bounds for (n, q, L) as a dict."""
    return json.loads(_checked("bounds", n=n, q=q, L=L, **options))


def simulate(code, graph, n, q, **options):
    """Simulation document; a dict for out="json", CSV text otherwise."""
    out = _checked("simulate", code=code, graph=graph, n=n, q=q, **options)
    return json.loads(out) if options.get("out") == "json" else out


def robust_eval(n, q, L, **options):
    """Robust code against the balls-in-bins oracle, as a dict."""
    options.setdefault("seq", "cyclic")
    return json.loads(_checked("robust-eval", n=n, q=q, L=L, out="json", **options))


def worked_example():
    """True when the n=16, q=4, L=56 split-code example replays exactly."""
    code, _, _ = run("example-paper", quiet=True)
    return code == 0
