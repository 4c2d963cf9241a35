"""Base command classes and output utilities for spinpoly commands."""
import csv
import io
import json
import logging
import os
import sys
import tempfile
from typing import Any, Dict, Iterable, List, Optional, Sequence

from src.config import OUTPUT_DEFAULTS, RunConfig
from src.errors import ConfigError
from src.model import SpinSystem, Volume, beg_system, power_law_system, zero_system

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def format_value(value: Any) -> str:
    """Shortest round-trip text for floats, lowercase booleans, empty for None"""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def parse_value(text: str) -> Any:
    """Inverse of format_value for the column types spinpoly writes"""
    if text == '':
        return None
    if text in ('true', 'false'):
        return text == 'true'
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def format_sites(sites: Sequence[Sequence[int]]) -> str:
    """'0,0;0,1' style: coordinates joined by ',', sites by ';'"""
    coord_sep = OUTPUT_DEFAULTS['coordinate_separator']
    return OUTPUT_DEFAULTS['site_separator'].join(
        coord_sep.join(str(c) for c in site) for site in sites
    )


def parse_sites(text: str) -> List[tuple]:
    """Inverse of format_sites"""
    coord_sep = OUTPUT_DEFAULTS['coordinate_separator']
    return [tuple(int(c) for c in part.split(coord_sep))
            for part in text.split(OUTPUT_DEFAULTS['site_separator'])]


def atomic_write(path: str, text: str):
    """Write to a temporary file next to path, then rename over it"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    handle, temp_path = tempfile.mkstemp(dir=directory, prefix='.spinpoly-', suffix='.tmp')
    try:
        with os.fdopen(handle, 'w', encoding='utf-8', newline='') as temp:
            temp.write(text)
        os.replace(temp_path, path)
    except OSError:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise


def render_csv(columns: Sequence[str], rows: Iterable[Dict[str, Any]]) -> str:
    """CSV text with a header row"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row[column]) for column in columns])
    return buffer.getvalue()


def render_json(payload: Any) -> str:
    """Indented JSON with a trailing newline"""
    return json.dumps(payload, indent=2) + '\n'


def read_csv(path: str) -> List[Dict[str, Any]]:
    """Rows of a spinpoly CSV file with typed values"""
    with open(path, encoding='utf-8', newline='') as handle:
        return [{key: parse_value(value) for key, value in row.items()}
                for row in csv.DictReader(handle)]


def read_json(path: str) -> Any:
    """Load a spinpoly JSON file"""
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


class BaseCommandMixin:
    """Base mixin for command functionality"""

    def __init__(self, config: RunConfig):
        self.config = config

    def build_system(self) -> SpinSystem:
        """Spin system described by the run config"""
        spec = self.config.system
        if spec.potential == 'beg':
            if spec.N != 1:
                raise ConfigError("the beg potential is a spin-1 model: system.N must be 1")
            return beg_system(spec.V, spec.K, spec.D, spec.beta, spec.d)
        if spec.potential == 'power_law':
            return power_law_system(spec.C, spec.epsilon, spec.D, spec.beta,
                                    d=spec.d, N=spec.N, radius=spec.coupling_radius)
        return zero_system(spec.D, spec.beta, spec.d, spec.N)

    def build_volume(self) -> Volume:
        """Finite volume described by the run config"""
        spec = self.config.volume
        volume = Volume.chain(spec.sides[0]) if spec.shape == 'chain' else Volume.box(*spec.sides)
        if volume.dimension != self.config.system.d:
            raise ConfigError(
                f"volume is {volume.dimension}-dimensional but system.d = {self.config.system.d}"
            )
        return volume

    def emit(self, text: str, path: Optional[str] = None):
        """Write command output to path (atomically) or to stdout"""
        target = path if path is not None else self.config.output_path
        if target:
            atomic_write(target, text)
            logger.info("Wrote %s", target)
        else:
            sys.stdout.write(text)

    def emit_table(self, columns: Sequence[str], rows: List[Dict[str, Any]]):
        """Rows as CSV or as a JSON list, following output.format"""
        if self.config.output_format == 'json':
            self.emit(render_json([{c: row[c] for c in columns} for row in rows]))
        else:
            self.emit(render_csv(columns, rows))
