"""
Error hierarchy and error-report formatting for qclass.

Every error raised on purpose by the library derives from QClassError and
carries the process exit status the command line reports for it.
"""
from typing import Any, Optional


# Process exit statuses
EXIT_OK = 0  # verification passed / command succeeded
EXIT_FAIL = 1  # verification failed or internal integrity failure
EXIT_PRECONDITION = 2  # theorem hypothesis not met, resource bound exceeded
EXIT_USAGE = 64  # unknown subcommand, schema violation, invalid input


class QClassError(Exception):
    """Base exception for all qclass errors.

    Attributes:
        message: Error message
        code: Exit status associated with the error
        data: Optional additional error data
    """

    def __init__(self, message: str, code: int, data: Optional[dict[str, Any]] = None):
        """Initialize qclass error.

        Args:
            message: Error message
            code: Exit status associated with the error
            data: Optional additional error data
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.data = data


class InvalidInputError(QClassError):
    """Malformed input: unknown labels, non-bijective maps, bad instance files."""

    def __init__(self, message: str, data: Optional[dict[str, Any]] = None):
        super().__init__(message, EXIT_USAGE, data)


class ConfigurationError(QClassError):
    """Configuration file or environment override could not be used.

    Raised while the configuration is loaded, before any computation starts.
    """

    def __init__(self, message: str, data: Optional[dict[str, Any]] = None):
        super().__init__(message, EXIT_USAGE, data)


class PreconditionError(QClassError):
    """A hypothesis of the requested computation does not hold.

    Examples are asking for a compatible order of a double poset that is not
    locally special, or for the orientation poset of a cyclic orientation.
    """

    def __init__(self, message: str, data: Optional[dict[str, Any]] = None):
        super().__init__(message, EXIT_PRECONDITION, data)


class ResourceError(QClassError):
    """A configured size bound (ground set, group order) would be exceeded."""

    def __init__(self, message: str, data: Optional[dict[str, Any]] = None):
        super().__init__(message, EXIT_PRECONDITION, data)


class IntegrityError(QClassError):
    """An internal consistency check failed.

    Raised when exact arithmetic produces something the theory rules out,
    for instance a non-integral orbit count.
    """

    def __init__(self, message: str, data: Optional[dict[str, Any]] = None):
        super().__init__(message, EXIT_FAIL, data)


def format_error_response(error: Exception) -> dict[str, Any]:
    """
    Format an exception as a JSON-ready error report.

    Args:
        error: Exception to format

    Returns:
        Dictionary with an "error" object holding code, type, message and data
    """
    if isinstance(error, QClassError):
        code = error.code
        message = error.message
        data = error.data
    else:
        # Unexpected exception - report as a failure
        code = EXIT_FAIL
        message = str(error)
        data = {"type": type(error).__name__}

    report: dict[str, Any] = {
        "error": {
            "code": code,
            "type": type(error).__name__,
            "message": message,
        }
    }

    if data is not None:
        report["error"]["data"] = data

    return report
