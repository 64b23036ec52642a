import sys

from src.handlers.cli_handler import main

sys.exit(main())
