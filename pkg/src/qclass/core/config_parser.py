"""
Configuration loading for qclass.

This module reads JSON configuration files, applies environment overrides
and holds the process-wide active configuration.
"""
import json
import os
import threading
from dataclasses import replace
from pathlib import Path
from typing import Any, Mapping, Optional

from qclass.core.config import LimitsConfig, QClassConfig, SelftestConfig
from qclass.core.errors import ConfigurationError


ENV_MAX_N = "QCLASS_MAX_N"

_active_config: Optional[QClassConfig] = None
_config_lock = threading.Lock()


def load_config(config_path: str | Path) -> QClassConfig:
    """
    Load and parse configuration from a JSON file.

    Args:
        config_path: Path to the configuration file

    Returns:
        Parsed QClassConfig object

    Raises:
        ConfigurationError: If config file is missing, malformed, or invalid
    """
    config_path = Path(config_path)

    if not config_path.exists():
        raise ConfigurationError(
            f"Configuration file not found: {config_path}",
            data={"path": str(config_path)}
        )

    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config_dict = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Invalid JSON in configuration file: {e}")
    except OSError as e:
        raise ConfigurationError(f"Failed to read configuration file: {e}")

    try:
        return parse_config(config_dict)
    except (ValueError, KeyError, TypeError) as e:
        raise ConfigurationError(f"Invalid configuration structure: {e}")


def parse_config(config_dict: dict[str, Any]) -> QClassConfig:
    """
    Parse a configuration dictionary into a QClassConfig object.

    All sections are optional; missing keys keep their defaults.

    Args:
        config_dict: Configuration dictionary from JSON

    Returns:
        Parsed QClassConfig object

    Raises:
        ValueError: If a value is out of range
        KeyError: If an unknown key is present
        TypeError: If field types are incorrect
    """
    if not isinstance(config_dict, dict):
        raise TypeError("Configuration must be a JSON object")

    unknown = set(config_dict) - {'limits', 'selftest', 'log_level'}
    if unknown:
        raise KeyError(f"Unknown configuration keys: {sorted(unknown)}")

    limits = LimitsConfig(**_section(config_dict, 'limits', LimitsConfig))
    selftest = SelftestConfig(**_section(config_dict, 'selftest', SelftestConfig))

    log_level = config_dict.get('log_level', 'WARNING')
    if not isinstance(log_level, str):
        raise TypeError("'log_level' must be a string")

    return QClassConfig(limits=limits, selftest=selftest, log_level=log_level)


def _section(config_dict: dict[str, Any], name: str, schema: type) -> dict[str, Any]:
    section = config_dict.get(name, {})
    if not isinstance(section, dict):
        raise TypeError(f"'{name}' must be a dictionary")

    fields = schema.__dataclass_fields__
    for key, value in section.items():
        if key not in fields:
            raise KeyError(f"Unknown key '{key}' in '{name}'")
        # bool is an int subclass; reject it for numeric settings
        expected = fields[key].type
        if expected in (int, 'int') and (isinstance(value, bool) or not isinstance(value, int)):
            raise TypeError(f"'{name}.{key}' must be an integer")
        if expected in (float, 'float') and not isinstance(value, (int, float)):
            raise TypeError(f"'{name}.{key}' must be a number")
    return section


def apply_env_overrides(
    config: QClassConfig,
    environ: Optional[Mapping[str, str]] = None
) -> QClassConfig:
    """
    Apply environment variable overrides to a configuration.

    Args:
        config: Configuration to start from
        environ: Environment mapping (default: os.environ)

    Returns:
        New configuration with overrides applied

    Raises:
        ConfigurationError: If an override is not a nonnegative integer
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(ENV_MAX_N)
    if raw is None or raw.strip() == "":
        return config

    try:
        max_n = int(raw)
        limits = replace(config.limits, max_n=max_n)
    except ValueError as e:
        raise ConfigurationError(
            f"{ENV_MAX_N} must be a nonnegative integer, got '{raw}'",
            data={"variable": ENV_MAX_N, "value": raw, "reason": str(e)}
        )

    return replace(config, limits=limits)


def get_config() -> QClassConfig:
    """Return the active configuration, building it from defaults and the environment."""
    global _active_config
    with _config_lock:
        if _active_config is None:
            _active_config = apply_env_overrides(QClassConfig())
        return _active_config


def set_config(config: Optional[QClassConfig]) -> None:
    """Install ``config`` as the active configuration; ``None`` resets to defaults."""
    global _active_config
    with _config_lock:
        _active_config = config


def get_limits(limits: Optional[LimitsConfig] = None) -> LimitsConfig:
    """Return ``limits`` or, when omitted, the limits of the active configuration."""
    return limits if limits is not None else get_config().limits
