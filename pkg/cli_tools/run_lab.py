#!/usr/bin/env python3
"""
Dedekind Lab runner.

Runs the command-line harness from a source checkout without installing
the package, e.g.:

    python cli_tools/run_lab.py eval-s 37 40
    python cli_tools/run_lab.py verify thm1 --b-max 150 --format csv
"""

import sys
from pathlib import Path

# Add the parent directory to sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

from dedekind_lab.cli import main

if __name__ == "__main__":
    sys.exit(main())
