"""Activity table export."""
import logging
from typing import Dict, List

from src.config import ENUMERATION_LIMITS
from src.polymers import Polymer, activity_size_bound, activity_table
from .base import EXIT_OK, BaseCommandMixin, format_sites, parse_sites

logger = logging.getLogger(__name__)

ACTIVITY_COLUMNS = ('sites', 'size', 'zeta', 'size_bound')


def rows_to_activities(rows: List[Dict[str, object]]) -> Dict[Polymer, float]:
    """Polymer -> zeta from rows read back from an activities export"""
    return {Polymer(tuple(parse_sites(str(row['sites'])))): float(row['zeta'])  # type: ignore[arg-type]
            for row in rows}


class ActivitiesCommands(BaseCommandMixin):
    """Exact polymer activities with the closed-form size bound alongside"""

    def cmd_activities(self) -> int:
        """One row per polymer of the volume"""
        system, volume = self.build_system(), self.build_volume()
        max_size = self.config.max_size or min(len(volume),
                                               ENUMERATION_LIMITS['max_polymer_size'])
        table = activity_table(system, volume, max_size)
        bounds = {n: activity_size_bound(system, n) for n in range(2, max_size + 1)}
        rows = [
            {
                'sites': format_sites(polymer.sites),
                'size': len(polymer),
                'zeta': table[polymer],
                'size_bound': bounds[len(polymer)],
            }
            for polymer in table.polymers
        ]
        self.emit_table(ACTIVITY_COLUMNS, rows)
        return EXIT_OK
