"""
Configuration for Dedekind Lab.

Values are read from the environment, after loading an optional .env file
that sits next to this package.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
env_path = Path(__file__).parent / ".env"
load_dotenv(dotenv_path=env_path)

# Logging
LOG_LEVEL = os.getenv("DEDEKIND_LOG_LEVEL", "WARNING").upper()
LOG_DIR: Optional[str] = os.getenv("DEDEKIND_LOG_DIR") or None

# Output
OUTPUT_FORMAT = os.getenv("DEDEKIND_OUTPUT_FORMAT", "table")

# Bench: above this many bits the O(b) evaluator is skipped
NAIVE_MAX_BITS = int(os.getenv("DEDEKIND_NAIVE_MAX_BITS", "22"))
BENCH_TRIALS = int(os.getenv("DEDEKIND_BENCH_TRIALS", "100"))

# Process fan-out for census runs
WORKERS = int(os.getenv("DEDEKIND_WORKERS", "1"))
