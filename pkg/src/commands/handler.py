"""Command handler for spinpoly.

Routes an analysis name to its command and turns exceptions into exit codes.
"""
import logging
from typing import Optional

from src.config import RunConfig
from src.errors import InconsistencyError
from .activities import ActivitiesCommands
from .base import EXIT_FAILURE, EXIT_USAGE
from .expansion import ExpansionCommands
from .scan import ScanCommands
from .verify import ActivityHook, VerifyCommands

logger = logging.getLogger(__name__)


class CommandHandler:
    """Dispatches one analysis per invocation"""

    def __init__(self, config: RunConfig, activity_hook: Optional[ActivityHook] = None):
        self.config = config

        # Initialize command modules
        self.verify_commands = VerifyCommands(config, activity_hook)
        self.scan_commands = ScanCommands(config)
        self.activities_commands = ActivitiesCommands(config)
        self.expansion_commands = ExpansionCommands(config)

        # Command routing table
        self.commands = {
            'verify': self.verify_commands.cmd_verify,
            'scan': self.scan_commands.cmd_scan,
            'activities': self.activities_commands.cmd_activities,
            'expansion': self.expansion_commands.cmd_expansion,
        }

    def handle_command(self, name: Optional[str] = None) -> int:
        """Run the analysis and return its exit status"""
        name = name or self.config.analysis
        handler = self.commands.get(name)
        if handler is None:
            logger.error("Unknown analysis %s", name)
            return EXIT_USAGE
        logger.info("Running %s", name)
        try:
            return handler()
        except InconsistencyError as e:
            logger.error("Identity failure in %s: %s", name, e)
            return EXIT_FAILURE
        except ValueError as e:
            logger.error("Error running %s: %s", name, e)
            return EXIT_USAGE
        except OSError as e:
            logger.error("Cannot write output for %s: %s", name, e)
            return EXIT_USAGE
