import sys

from sepcodes.cli import main

sys.exit(main())
