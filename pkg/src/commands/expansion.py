"""Exact pressure against the truncated cluster series."""
import logging
import math

from src.expansion import log_partition_function_exact, pressure_exact, pressure_truncated
from src.polymers import activity_table
from .base import EXIT_OK, BaseCommandMixin, render_json

logger = logging.getLogger(__name__)


class ExpansionCommands(BaseCommandMixin):
    """Z, f and P on a finite volume with the cluster-series partial sums"""

    def cmd_expansion(self) -> int:
        """Emit the JSON record for the configured system and volume"""
        system, volume = self.build_system(), self.build_volume()
        table = activity_table(system, volume, len(volume))
        log_z = log_partition_function_exact(system, volume)
        pressure = pressure_exact(system, volume, table)
        partial_sums = pressure_truncated(table, self.config.order)
        record = {
            'volume': [list(site) for site in volume.sites],
            'beta': system.beta,
            'D': system.D,
            'Z': math.exp(log_z),
            'f': log_z / len(volume),
            'P_exact': pressure,
            'partial_sums': partial_sums,
            'abs_gaps': [abs(s - pressure) for s in partial_sums],
        }
        if self.config.output_format != 'json':
            logger.info("The expansion record is always written as JSON")
        self.emit(render_json(record))
        return EXIT_OK
