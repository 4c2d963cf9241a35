"""Tests for the command-line entry point."""
import json
from unittest.mock import patch

import pytest

from src.commands import EXIT_OK, EXIT_USAGE
from .app import build_parser, main


class TestParser:
    """Test argument parsing."""

    def test_flags(self):
        """Shared flags land on the namespace."""
        args = build_parser().parse_args(['scan', '--beta-max', '5', '--grid-step', '0.5'])
        assert args.analysis == 'scan'
        assert args.beta_max == 5.0
        assert args.grid_step == 0.5

    def test_unknown_analysis(self):
        """Only the four analyses exist."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(['plot'])


class TestMain:
    """Test main end to end."""

    def test_expansion(self, tmp_path):
        """A config file drives the expansion analysis."""
        config = tmp_path / 'run.cfg'
        config.write_text("system.D=1\nsystem.beta=0.2\nvolume.sides=3\n", encoding='utf-8')
        out = tmp_path / 'expansion.json'
        assert main(['expansion', '--config', str(config), '--out', str(out),
                     '--order', '2']) == EXIT_OK
        record = json.loads(out.read_text(encoding='utf-8'))
        assert len(record['partial_sums']) == 2

    def test_scan_flags(self, tmp_path):
        """--beta-max and --grid-step shape the grid."""
        out = tmp_path / 'scan.csv'
        assert main(['scan', '--beta-max', '2', '--grid-step', '0.5', '--out', str(out)]) == EXIT_OK
        assert len(out.read_text(encoding='utf-8').splitlines()) == 6

    def test_bad_config(self, tmp_path):
        """Invalid configs exit 2."""
        config = tmp_path / 'bad.cfg'
        config.write_text("system.potential=unknown\n", encoding='utf-8')
        assert main(['activities', '--config', str(config)]) == EXIT_USAGE

    def test_bad_arguments(self):
        """argparse errors exit 2."""
        assert main(['scan', '--grid-step', 'fine']) == EXIT_USAGE
        assert main([]) == EXIT_USAGE

    def test_help(self):
        """--help exits cleanly."""
        assert main(['--help']) == 0

    def test_log_file(self, tmp_path, monkeypatch):
        """SPINPOLY_LOG_FILE adds a file handler."""
        log_file = tmp_path / 'spinpoly.log'
        monkeypatch.setenv('SPINPOLY_LOG_FILE', str(log_file))
        monkeypatch.setenv('SPINPOLY_LOG_LEVEL', 'debug')
        assert main(['activities', '--out', str(tmp_path / 'z.csv')]) == EXIT_OK
        assert 'Running activities' in log_file.read_text(encoding='utf-8')

    @patch('src.app.app.CommandHandler')
    def test_dispatch(self, mock_handler):
        """main hands the loaded config to the command handler."""
        mock_handler.return_value.handle_command.return_value = EXIT_OK
        assert main(['verify', '--seed', '5']) == EXIT_OK
        config = mock_handler.call_args.args[0]
        assert config.analysis == 'verify'
        assert config.seed == 5
