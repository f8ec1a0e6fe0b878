"""Allows ``python -m hyperdet``."""

import sys

from hyperdet.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
