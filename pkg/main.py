"""
keyslide
Command-line entry point for key polynomial and slide expansion computations.
"""

import sys

from keyslide.cli import main

if __name__ == "__main__":
    sys.exit(main())
