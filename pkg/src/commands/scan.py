"""Convergence scan over beta."""
import logging

from src.config import OUTPUT_DEFAULTS, SCAN_DEFAULTS
from src.convergence import scan_report
from .base import EXIT_OK, BaseCommandMixin, render_json

logger = logging.getLogger(__name__)

SCAN_COLUMNS = ('beta', 'lhs_estr', 'rhs_estr', 'verdict_estr', 'verdict_fp', 'verdict_estr2')


class ScanCommands(BaseCommandMixin):
    """Per-beta criterion table plus the beta1 / beta2 / Dc summary"""

    def cmd_scan(self) -> int:
        """Evaluate the criteria on the beta range and write rows and summary"""
        system = self.build_system()
        beta_range = self.config.system.beta_range
        if beta_range is None:
            beta_range = (0.0, SCAN_DEFAULTS['beta_max'], SCAN_DEFAULTS['grid_step'])
            logger.info("No system.beta_range given, scanning %s:%s:%s", *beta_range)
        lo, hi, step = beta_range
        report = scan_report(system, beta_max=hi, step=step, beta_min=lo)

        self.emit_table(SCAN_COLUMNS, report.rows())
        summary = render_json(report.summary())
        if self.config.output_path:
            self.emit(summary, self.config.output_path + OUTPUT_DEFAULTS['summary_suffix'])
        else:
            logger.info("Scan summary: %s", summary.strip())
        return EXIT_OK
