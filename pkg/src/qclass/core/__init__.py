"""Core configuration, errors, logging and data models for qclass."""

from .config import LimitsConfig, QClassConfig, SelftestConfig
from .config_parser import (
    load_config,
    parse_config,
    apply_env_overrides,
    get_config,
    set_config,
    get_limits,
)
from .errors import (
    QClassError,
    InvalidInputError,
    ConfigurationError,
    PreconditionError,
    ResourceError,
    IntegrityError,
    format_error_response,
    EXIT_OK,
    EXIT_FAIL,
    EXIT_PRECONDITION,
    EXIT_USAGE,
)
from .instance_parser import load_instance, parse_instance
from .logging import (
    LogEntry,
    JSONFormatter,
    setup_logging,
    log_with_metadata,
    log_timing,
)
from .models import InstanceFile, VerdictReport, Witness

__all__ = [
    'LimitsConfig',
    'QClassConfig',
    'SelftestConfig',
    'load_config',
    'parse_config',
    'apply_env_overrides',
    'get_config',
    'set_config',
    'get_limits',
    'QClassError',
    'InvalidInputError',
    'ConfigurationError',
    'PreconditionError',
    'ResourceError',
    'IntegrityError',
    'format_error_response',
    'EXIT_OK',
    'EXIT_FAIL',
    'EXIT_PRECONDITION',
    'EXIT_USAGE',
    'load_instance',
    'parse_instance',
    'LogEntry',
    'JSONFormatter',
    'setup_logging',
    'log_with_metadata',
    'log_timing',
    'InstanceFile',
    'VerdictReport',
    'Witness',
]
