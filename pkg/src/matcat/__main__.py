import sys

from matcat.cli import main

sys.exit(main())
