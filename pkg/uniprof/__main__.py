"""Run the ``uniprof`` command."""

import sys

from .cli import main

sys.exit(main())
