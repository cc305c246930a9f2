import sys

from tvb.cli import main

sys.exit(main())
