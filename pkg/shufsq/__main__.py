import sys

from shufsq.cli import main

sys.exit(main())
