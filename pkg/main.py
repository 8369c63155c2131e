# Main Entry Point
"""Main entry point for the gapbound CLI."""
import sys

from cli import run


def main() -> int:
    """Run one gapbound command and return its exit code."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
