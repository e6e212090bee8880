import sys

from src.cli.runner import main

sys.exit(main())
