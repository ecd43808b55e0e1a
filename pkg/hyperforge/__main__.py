#!/usr/bin/env python3
"""
hyperforge - main module entry point

Allows running the tool as a module:
    python3 -m hyperforge [args...]
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
