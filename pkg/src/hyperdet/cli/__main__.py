"""Allows ``python -m hyperdet.cli``."""

import sys

from hyperdet.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
