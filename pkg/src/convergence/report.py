"""Per-beta convergence report over a grid."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.config import SCAN_DEFAULTS
from src.model import SpinSystem
from .criteria import Dc_upper, criterion_closed_form, criterion_crude, estr_sides
from .intervals import beta_grid, find_beta_intervals
from .series import SizeSeries, fp_infimum

logger = logging.getLogger(__name__)

VERDICT_KEYS = ('closed_form_estr', 'numeric_FP_inf', 'crude_estr2')


@dataclass
class ConvergenceReport:  # pylint: disable=too-many-instance-attributes
    """Criterion verdicts along a beta grid with the interval endpoints"""
    params: Dict[str, object]
    beta_grid: List[float] = field(default_factory=list)
    lhs_estr: List[float] = field(default_factory=list)
    rhs_estr: List[float] = field(default_factory=list)
    verdicts: Dict[str, List[bool]] = field(
        default_factory=lambda: {key: [] for key in VERDICT_KEYS})
    beta1: Optional[float] = None
    beta2: Optional[float] = None
    all_beta: bool = False
    certified: bool = False
    Dc_upper: Optional[float] = None  # pylint: disable=invalid-name

    def rows(self) -> List[Dict[str, object]]:
        """One record per grid point, in grid order"""
        return [
            {
                'beta': beta,
                'lhs_estr': self.lhs_estr[k],
                'rhs_estr': self.rhs_estr[k],
                'verdict_estr': self.verdicts['closed_form_estr'][k],
                'verdict_fp': self.verdicts['numeric_FP_inf'][k],
                'verdict_estr2': self.verdicts['crude_estr2'][k],
            }
            for k, beta in enumerate(self.beta_grid)
        ]

    def summary(self) -> Dict[str, object]:
        """Endpoints and thresholds for the summary record"""
        return {
            **self.params,
            'beta1': self.beta1,
            'beta2': self.beta2,
            'all_beta': self.all_beta,
            'persistence_certified': self.certified,
            'Dc_upper': self.Dc_upper,
            'grid_points': len(self.beta_grid),
        }


def scan_report(
    sys: SpinSystem,
    beta_max: float = SCAN_DEFAULTS['beta_max'],
    step: float = SCAN_DEFAULTS['grid_step'],
    refine_tol: float = SCAN_DEFAULTS['refine_tol'],
    beta_min: float = 0.0,
) -> ConvergenceReport:
    """Evaluate all three criteria on the grid and locate beta1, beta2"""
    report = ConvergenceReport(params={
        'N': sys.N, 'D': sys.D, 'J': sys.J, 'coupling': sys.coupling.descriptor,
    })
    for beta in beta_grid(beta_max, step, beta_min):
        at = sys.with_beta(float(beta))
        lhs, rhs = estr_sides(at)
        report.beta_grid.append(float(beta))
        report.lhs_estr.append(lhs)
        report.rhs_estr.append(rhs)
        report.verdicts['closed_form_estr'].append(criterion_closed_form(at))
        report.verdicts['numeric_FP_inf'].append(fp_infimum(SizeSeries.closed_form(at)).satisfied)
        report.verdicts['crude_estr2'].append(criterion_crude(at))
    intervals = find_beta_intervals(sys, beta_max, step, refine_tol)
    report.beta1, report.beta2 = intervals.beta1, intervals.beta2
    report.all_beta, report.certified = intervals.all_beta, intervals.certified
    if sys.J > 0:
        report.Dc_upper = Dc_upper(sys.N, sys.J)
    logger.info("Scanned %d beta values: beta1=%s beta2=%s all_beta=%s",
                len(report.beta_grid), report.beta1, report.beta2, report.all_beta)
    return report
