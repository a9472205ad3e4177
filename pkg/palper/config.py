"""
Settings for palper runs.

The schema uses MkDocs config options so the same keys validate in a
standalone ``palper.yml`` and in the ``palper`` plugin section of ``mkdocs.yml``.
"""

import logging
import os
from typing import Any, Dict, List, Optional

import yaml
from mkdocs.config import config_options
from mkdocs.config.base import LegacyConfig
from mkdocs.exceptions import ConfigurationError

from .workers import resolve_threads

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "palper.yml"

SETTINGS_SCHEMA = (
    ('initial_prefix', config_options.Type(int, default=4096)),
    ('growth_factor', config_options.Type(int, default=2)),
    ('prefix_cap', config_options.Type(int, default=2 ** 22)),
    ('probe_length', config_options.Type(int, default=64)),
    ('periodic_cap_multiplier', config_options.Type(int, default=8)),
    ('tribonacci_convention', config_options.Choice(('standard', 'literal'), default='standard')),
    ('threads', config_options.Optional(config_options.Type(int))),
    ('progress', config_options.Type(bool, default=False)),
    ('debug', config_options.Type(bool, default=False)),
)

SETTING_KEYS = tuple(key for key, _ in SETTINGS_SCHEMA)


def _get_expected_range_hint(key):
    """Return the accepted range for numeric settings."""
    hints = {
        'initial_prefix': 'at least 1',
        'growth_factor': 'at least 2',
        'prefix_cap': 'at least initial_prefix',
        'probe_length': 'at least 1',
        'periodic_cap_multiplier': 'at least 2',
        'threads': 'at least 1',
    }
    return hints.get(key, 'a valid value')


def range_issues(settings) -> List[str]:
    """Range checks the schema types cannot express."""
    issues = []
    minimums = {
        'initial_prefix': 1,
        'growth_factor': 2,
        'probe_length': 1,
        'periodic_cap_multiplier': 2,
    }
    for key, minimum in minimums.items():
        if settings[key] < minimum:
            issues.append(f"{key} must be {_get_expected_range_hint(key)}, got {settings[key]}")
    if settings['prefix_cap'] < settings['initial_prefix']:
        issues.append(
            f"prefix_cap must be {_get_expected_range_hint('prefix_cap')}, got {settings['prefix_cap']}"
        )
    if settings['threads'] is not None and settings['threads'] < 1:
        issues.append(f"threads must be {_get_expected_range_hint('threads')}, got {settings['threads']}")
    return issues


def load_settings(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> LegacyConfig:
    """Defaults, then the YAML file, then ``PALPER_THREADS``, then ``overrides``."""
    settings = LegacyConfig(SETTINGS_SCHEMA, config_file_path=path)

    if path is None and os.path.exists(DEFAULT_CONFIG_FILE):
        path = DEFAULT_CONFIG_FILE
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = yaml.safe_load(fh) or {}
        except (OSError, yaml.YAMLError) as e:
            logger.error(f"Configuration error: cannot read {path}: {e}")
            raise ConfigurationError(f"cannot read {path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{path} must contain a mapping of settings")
        unknown = sorted(set(data) - set(SETTING_KEYS))
        for key in unknown:
            logger.warning(f"Ignoring unknown setting '{key}' in {path}")
        settings.load_dict({k: v for k, v in data.items() if k in SETTING_KEYS})
        logger.debug(f"Loaded settings from {path}")

    explicit = {k: v for k, v in (overrides or {}).items() if v is not None}
    if explicit:
        settings.load_dict(explicit)

    failed, warnings = settings.validate()
    for key, warning in warnings:
        logger.warning(f"Configuration warning for '{key}': {warning}")
    issues = [f"{key}: {error}" for key, error in failed]
    if not issues:
        issues = range_issues(settings)
    for issue in issues:
        logger.error(f"Configuration error: {issue}")
    if issues:
        raise ConfigurationError("; ".join(issues))

    settings['threads'] = resolve_threads(settings['threads'])
    return settings
