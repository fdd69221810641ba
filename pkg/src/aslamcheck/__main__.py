import sys

from aslamcheck.cli import main

sys.exit(main())
