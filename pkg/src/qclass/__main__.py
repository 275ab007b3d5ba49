"""
Main entry point for qclass.

Usage:
    python -m qclass <command> [options]
    qclass <command> [options]
"""
import sys

from qclass.cli.commands import run


def main() -> None:
    """Run the command line and exit with its status."""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
