"""
Settings for gainmat: enumeration budgets, random corpora, the verify
battery and output. Read from TOML, overridden from the command line.
"""

import os
import sys
import warnings
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import GainMatError

# tomllib ships with Python 3.11+, tomli is the backport
try:
    import tomllib  # type: ignore
except ImportError:
    try:
        import tomli as tomllib  # type: ignore
    except ImportError:
        tomllib = None  # type: ignore


AXIOM_MODES = ('exhaustive', 'sampled')

# section -> key -> (default, comment written by init-config)
SCHEMA = {
    'budget': {
        'max_subset_edges': (16, 'largest ground set for subset enumerations (flats, bases, polynomials)'),
        'max_circuit_edges': (20, 'largest ground set for the minimal-dependent-set search'),
    },
    'random': {
        'random_vertices': (4, 'random instances have 1..random_vertices vertices'),
        'random_edges': (6, 'and 0..random_edges edges'),
        'gain_range': (2, 'integer gains are drawn from [-gain_range, gain_range]'),
    },
    'verify': {
        'axiom_mode': ('exhaustive', 'exhaustive or sampled rank axiom checks'),
        'axiom_samples': (500, 'subsets drawn per instance in sampled mode'),
        'minor_pairs': (64, 'random (contract, test) pairs per instance'),
    },
    'output': {
        'force_color': (False, 'colour the summary even when stderr is not a terminal'),
        'pretty': (False, 'highlight JSON lines on colour terminals'),
    },
}

DEFAULT_CONFIG = {key: default for keys in SCHEMA.values() for key, (default, _) in keys.items()}


def check_value(key: str, value: Any) -> Any:
    """
    Validate one setting against the type of its default.

    Raises:
        GainMatError: For a wrong type, a budget below 1, or an unknown axiom mode
    """
    default = DEFAULT_CONFIG[key]
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise GainMatError(f'{key} must be true or false, got {value!r}')
    elif isinstance(default, int):
        if isinstance(value, bool) or not isinstance(value, int):
            raise GainMatError(f'{key} must be an integer, got {value!r}')
        if value < (0 if key == 'gain_range' else 1):
            raise GainMatError(f'{key} is too small: {value}')
    elif key == 'axiom_mode' and value not in AXIOM_MODES:
        raise GainMatError(f'axiom_mode must be one of {", ".join(AXIOM_MODES)}, got {value!r}')
    return value


class GainmatConfig:
    """
    Settings with defaults from DEFAULT_CONFIG. Unknown keys are reported
    with a warning and ignored; None means "not given".
    """
    def __init__(self, **kwargs):
        self.config = DEFAULT_CONFIG.copy()
        for key, value in kwargs.items():
            if key not in self.config:
                warnings.warn(f"Unknown configuration key: {key!r}")
            elif value is not None:
                self.config[key] = check_value(key, value)

    @classmethod
    def from_file(cls, config_path: Optional[Path] = None, **overrides):
        """Read a file (or the first one found), then apply keyword overrides"""
        settings = load_config(config_path)
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**settings)

    def get(self, key, default=None):
        return self.config.get(key, default)

    def __getattr__(self, name):
        if name != 'config' and name in self.config:
            return self.config[name]
        raise AttributeError(f"'GainmatConfig' object has no attribute '{name}'")


def find_config_file() -> Optional[Path]:
    """
    First existing file of ./.gainmat.toml, ~/.gainmat/config.toml and
    $XDG_CONFIG_HOME/gainmat/config.toml (XDG defaults to ~/.config).
    """
    home = Path.home()
    xdg_config = Path(os.environ.get('XDG_CONFIG_HOME', home / '.config'))
    for candidate in (Path.cwd() / '.gainmat.toml',
                      home / '.gainmat' / 'config.toml',
                      xdg_config / 'gainmat' / 'config.toml'):
        if candidate.exists():
            return candidate
    return None


def _warn(message: str):
    print(f"Warning: {message}", file=sys.stderr)


def load_config(config_path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load settings from a TOML file.

    Keys are only read from their own section. Unreadable files and bad
    values are reported on stderr and replaced by defaults.

    Args:
        config_path: Path to config file (default: find automatically)

    Returns:
        Settings dictionary with defaults applied
    """
    if config_path is None:
        config_path = find_config_file()

    config = DEFAULT_CONFIG.copy()

    if config_path is None or tomllib is None:
        return config

    try:
        with open(config_path, 'rb') as f:
            file_config = tomllib.load(f)
    except OSError as e:
        _warn(f"Could not read config file {config_path}: {e}")
        return config
    except tomllib.TOMLDecodeError as e:
        _warn(f"Could not parse config file {config_path}: {e}")
        return config

    for section, keys in SCHEMA.items():
        values = file_config.get(section, {})
        if not isinstance(values, dict):
            _warn(f"[{section}] in {config_path} is not a table")
            continue
        for key in keys:
            if key not in values:
                continue
            try:
                config[key] = check_value(key, values[key])
            except GainMatError as e:
                _warn(f"{config_path}: {e}; using {DEFAULT_CONFIG[key]!r}")

    return config


def _toml_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, str):
        return f'"{value}"'
    return str(value)


def default_config_text() -> str:
    """The commented default file written by `gainmat init-config`"""
    lines = ['# gainmat configuration']
    for section, keys in SCHEMA.items():
        lines += ['', f'[{section}]']
        for key, (default, comment) in keys.items():
            lines += [f'# {comment}', f'{key} = {_toml_value(default)}']
    return '\n'.join(lines) + '\n'


def create_default_config(config_path: Optional[Path] = None) -> Path:
    """
    Write the default configuration file.

    Args:
        config_path: Target file (default: ~/.gainmat/config.toml)

    Returns:
        Path to created config file
    """
    if config_path is None:
        config_path = Path.home() / '.gainmat' / 'config.toml'
    config_path = Path(config_path)
    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text(default_config_text(), encoding='utf-8')
    return config_path
