# SPDX-License-Identifier: Apache-2.0
"""Exact-decimal evaluation of the compound limit (1+1/n)^n.

The heavy lifting lives in the C++ extension ``elab._core``: an arbitrary
precision decimal type with half-even rounding, the forward march of
f' = f, schedule sweeps with exact error measurement, and binary64
comparison modes. This package re-exports that surface unchanged.
"""

from elab._core import (
    Approximation,
    ConvergenceReport,
    Decimal,
    EulerTrajectory,
    FloatApproximation,
    Mode,
    Schedule,
    StepSpec,
    SweepPoint,
    SweepResult,
    add,
    add_exact,
    attach_error,
    compound_approx,
    div,
    estimate_order,
    euler_march,
    euler_step,
    float_compound_approx,
    float_error_sweep,
    limit_schedule,
    make_convergence_report,
    mode_from_name,
    mode_name,
    mul,
    mul_exact,
    pow_int,
    pow_int_with_stats,
    reference_e,
    report_json,
    richardson_extrapolate,
    run_cli,
    scaled_error,
    solve_for_e_euler,
    sub,
    sub_exact,
    to_sig_figs,
)

__all__ = [
    "Approximation",
    "ConvergenceReport",
    "Decimal",
    "EulerTrajectory",
    "FloatApproximation",
    "Mode",
    "Schedule",
    "StepSpec",
    "SweepPoint",
    "SweepResult",
    "add",
    "add_exact",
    "attach_error",
    "compound_approx",
    "div",
    "estimate_order",
    "euler_march",
    "euler_step",
    "float_compound_approx",
    "float_error_sweep",
    "limit_schedule",
    "make_convergence_report",
    "mode_from_name",
    "mode_name",
    "mul",
    "mul_exact",
    "pow_int",
    "pow_int_with_stats",
    "reference_e",
    "report_json",
    "richardson_extrapolate",
    "run_cli",
    "scaled_error",
    "solve_for_e_euler",
    "sub",
    "sub_exact",
    "to_sig_figs",
]

__version__ = "0.1.0"
