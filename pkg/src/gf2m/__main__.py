"""Entry point for ``python -m gf2m``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
