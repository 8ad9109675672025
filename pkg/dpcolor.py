import os
import sys

sys.path.insert(0, os.path.abspath("."))

from command_factory import run_command
from config import global_config, load_config

if __name__ == "__main__":
    load_config()
    sys.exit(run_command(global_config))
