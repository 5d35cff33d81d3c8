"""Allow `python -m kronring`."""

import sys

from kronring.main import main

sys.exit(main())
