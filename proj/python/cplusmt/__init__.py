"""C+ action descriptions compiled to SMT via the stable model semantics.

Thin convenience layer over the _cplusmt extension module.
"""

import json as _json

try:
    from ._cplusmt import (  # type: ignore[attr-defined]
        check_tight,
        compile,
        dump_completion,
        dump_rules,
        oracle_models,
        plan as _plan,
        pretty,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _cplusmt import (  # type: ignore[no-redef]
        check_tight,
        compile,
        dump_completion,
        dump_rules,
        oracle_models,
        plan as _plan,
        pretty,
    )

__all__ = [
    "check_tight",
    "compile",
    "dump_completion",
    "dump_rules",
    "oracle_models",
    "plan",
    "pretty",
]


def plan(text, solver, minstep=None, maxstep=None, strict=False, filename="<python>"):
    """Run the planner; returns the decoded plan as a dict, or None."""
    raw = _plan(text, solver, minstep, maxstep, strict, filename)
    return None if raw is None else _json.loads(raw)
