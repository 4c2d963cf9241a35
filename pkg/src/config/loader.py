"""Run configuration loading.

Run configs are flat ``key=value`` files with dotted keys (``system.N=1``),
read with python-dotenv so comments, quoting and blank lines behave like a
regular ``.env`` file.
"""
import logging
from typing import Any, Dict, Mapping, Optional, Tuple

from dotenv import dotenv_values

from src.errors import ConfigError
from .config import ANALYSES, SCAN_DEFAULTS, RunConfig, SystemSpec, VolumeSpec

logger = logging.getLogger(__name__)

_POTENTIALS = ('beg', 'power_law', 'zero')
_SHAPES = ('chain', 'box')
_FORMATS = ('csv', 'json')

_KNOWN_KEYS = {
    'system.d', 'system.N', 'system.D', 'system.beta', 'system.beta_range',
    'system.potential', 'system.potential.V', 'system.potential.K',
    'system.potential.C', 'system.potential.epsilon', 'system.coupling.radius',
    'volume.shape', 'volume.sides', 'analysis', 'analysis.max_size',
    'analysis.order', 'verify.samples', 'verify.seed', 'output.format',
    'output.path',
}


def _number(values: Mapping[str, Optional[str]], key: str, default: Any, kind=float):
    """Read a numeric key, falling back to default when absent"""
    raw = values.get(key)
    if raw is None or raw == '':
        return default
    try:
        return kind(raw)
    except ValueError as e:
        raise ConfigError(f"{key}: cannot parse {raw!r} as {kind.__name__}") from e


def _parse_sides(raw: str) -> Tuple[int, ...]:
    try:
        sides = tuple(int(part) for part in raw.lower().split('x'))
    except ValueError as e:
        raise ConfigError(f"volume.sides: malformed {raw!r}") from e
    if not sides or any(side < 1 for side in sides):
        raise ConfigError(f"volume.sides: sides must be positive, got {raw!r}")
    return sides


def _parse_range(raw: str) -> Tuple[float, float, float]:
    parts = raw.split(':')
    if len(parts) != 3:
        raise ConfigError(f"system.beta_range: expected lo:hi:step, got {raw!r}")
    try:
        lo, hi, step = (float(part) for part in parts)
    except ValueError as e:
        raise ConfigError(f"system.beta_range: malformed {raw!r}") from e
    if lo < 0 or hi <= lo or step <= 0:
        raise ConfigError(f"system.beta_range: need 0 <= lo < hi and step > 0, got {raw!r}")
    return lo, hi, step


def _system_spec(values: Mapping[str, Optional[str]]) -> SystemSpec:
    potential = (values.get('system.potential') or 'beg').lower()
    if potential not in _POTENTIALS:
        raise ConfigError(f"system.potential must be one of {_POTENTIALS}, got {potential!r}")
    raw_range = values.get('system.beta_range')
    return SystemSpec(
        d=_number(values, 'system.d', 1, int),
        N=_number(values, 'system.N', 1, int),
        D=_number(values, 'system.D', 1.0),
        beta=_number(values, 'system.beta', 1.0),
        beta_range=_parse_range(raw_range) if raw_range else None,
        potential=potential,
        V=_number(values, 'system.potential.V', 1.0),
        K=_number(values, 'system.potential.K', 0.0),
        C=_number(values, 'system.potential.C', 1.0),
        epsilon=_number(values, 'system.potential.epsilon', 1.0),
        coupling_radius=_number(values, 'system.coupling.radius', None, int),
    )


def _volume_spec(values: Mapping[str, Optional[str]]) -> VolumeSpec:
    shape = (values.get('volume.shape') or 'chain').lower()
    if shape not in _SHAPES:
        raise ConfigError(f"volume.shape must be one of {_SHAPES}, got {shape!r}")
    sides = _parse_sides(values.get('volume.sides') or '4')
    if shape == 'chain' and len(sides) != 1:
        raise ConfigError("volume.sides: a chain takes a single length")
    return VolumeSpec(shape=shape, sides=sides)


def _apply_scan_overrides(system: SystemSpec, overrides: Mapping[str, Any]):
    beta_max = overrides.get('beta_max')
    grid_step = overrides.get('grid_step')
    if beta_max is None and grid_step is None:
        return
    lo, hi, step = system.beta_range or (
        0.0, SCAN_DEFAULTS['beta_max'], SCAN_DEFAULTS['grid_step'])
    system.beta_range = _parse_range(
        f"{lo}:{beta_max if beta_max is not None else hi}:"
        f"{grid_step if grid_step is not None else step}"
    )


def parse_run_config(
    values: Mapping[str, Optional[str]],
    analysis: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Build a RunConfig from dotted key/value pairs plus command-line overrides"""
    overrides = overrides or {}
    for key in values:
        if key not in _KNOWN_KEYS:
            logger.warning("Ignoring unknown config key %s", key)

    declared = values.get('analysis')
    if analysis and declared and declared != analysis:
        raise ConfigError(
            f"config selects analysis {declared!r} but {analysis!r} was requested"
        )
    selected = analysis or declared
    if selected not in ANALYSES:
        raise ConfigError(f"exactly one analysis of {ANALYSES} must be selected")

    system = _system_spec(values)
    _apply_scan_overrides(system, overrides)
    if system.beta_range is not None and selected != 'scan':
        raise ConfigError("system.beta_range is only valid for the scan analysis")

    output_format = (overrides.get('format') or values.get('output.format') or 'csv').lower()
    if output_format not in _FORMATS:
        raise ConfigError(f"output.format must be one of {_FORMATS}, got {output_format!r}")

    config = RunConfig(
        analysis=selected,
        system=system,
        volume=_volume_spec(values),
        max_size=_number(values, 'analysis.max_size', None, int),
        order=_number(values, 'analysis.order', 4, int),
        samples=_number(values, 'verify.samples', RunConfig.samples, int),
        seed=_number(values, 'verify.seed', RunConfig.seed, int),
        output_format=output_format,
        output_path=overrides.get('out') or values.get('output.path') or None,
    )
    if overrides.get('order') is not None:
        config.order = int(overrides['order'])
    if overrides.get('seed') is not None:
        config.seed = int(overrides['seed'])
    return config


def load_run_config(
    path: Optional[str],
    analysis: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Read a dotted-key config file and build the RunConfig"""
    values: Dict[str, Optional[str]] = {}
    if path:
        try:
            with open(path, encoding='utf-8') as handle:
                values = dict(dotenv_values(stream=handle))
        except OSError as e:
            raise ConfigError(f"cannot read config {path}: {e}") from e
        logger.info("Loaded %d config keys from %s", len(values), path)
    return parse_run_config(values, analysis, overrides)
