import sys

from hilbertforge.cli import main

sys.exit(main())
