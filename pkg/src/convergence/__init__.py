"""Convergence criteria for the polymer expansion and the beta regions they certify."""
from .criteria import (
    Dc_upper, F_of_beta, criterion_closed_form, criterion_crude, crude_constant, crude_margin,
    estr_margin, estr_sides, h_beta, log_F_of_beta
)
from .series import FPResult, SizeSeries, criterion_numeric_FP, fp_infimum, fp_objective
from .intervals import (
    BetaIntervals, beta_grid, find_beta_intervals, margin_function, persistence_certified
)
from .report import ConvergenceReport, scan_report

__all__ = [
    'Dc_upper', 'F_of_beta', 'criterion_closed_form', 'criterion_crude', 'crude_constant',
    'crude_margin', 'estr_margin', 'estr_sides', 'h_beta', 'log_F_of_beta',
    'FPResult', 'SizeSeries', 'criterion_numeric_FP', 'fp_infimum', 'fp_objective',
    'BetaIntervals', 'beta_grid', 'find_beta_intervals', 'margin_function',
    'persistence_certified',
    'ConvergenceReport', 'scan_report',
]
