"""Allow ``python -m qfrieze``."""

import sys

from .cli import main

sys.exit(main())
