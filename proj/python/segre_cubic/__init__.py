"""Exact verification of the Segre cubic, its real forms and the S6 case analysis."""

import json

from ._core import (
    VerificationError,
    __version__,
    a5free_escapes,
    centralizer_order,
    cycle_type,
    fixed_counts,
    incidence,
    jacobian_rank,
    outer_automorphism,
    planes,
    real_forms,
    run_report,
    singular_points,
    subgroup_class_count,
    suite_names,
    twist_report,
)


def run(suites=("all",), workers=1, seed=None):
    """Run verification suites and return the parsed report."""
    kwargs = {"suites": list(suites), "workers": workers}
    if seed is not None:
        kwargs["seed"] = seed
    return json.loads(run_report(**kwargs))


__all__ = [
    "VerificationError",
    "__version__",
    "a5free_escapes",
    "centralizer_order",
    "cycle_type",
    "fixed_counts",
    "incidence",
    "jacobian_rank",
    "outer_automorphism",
    "planes",
    "real_forms",
    "run",
    "run_report",
    "singular_points",
    "subgroup_class_count",
    "suite_names",
    "twist_report",
]
