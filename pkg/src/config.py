# src/config.py

import os

from dotenv import load_dotenv

# Environment overrides (.env, MAXGENUS_*)
load_dotenv()

# Exhaustive search
ENUMERATION_BUDGET = int(os.getenv("MAXGENUS_BUDGET", str(2 ** 30)))
DEFAULT_JOBS = int(os.getenv("MAXGENUS_JOBS", "1"))
PARALLEL_MIN_SYSTEMS = 4096     # below this the scan stays in-process
CHUNKS_PER_JOB = 4
HALT_POLL_EVERY = 1024         # systems a worker scans between checks of the stop flag
CROSS_CHECK_EVERY = 0           # 0 = engine never cross-checks against the word reduction

# Local-search probe run before enumeration (early exit only)
PROBE_RESTARTS = 8
PROBE_SEED = 0
PROBE_MAX_PASSES = 64
PROBE_MAX_CHOICES = 40320     # largest per-vertex rotation table the probe will build

# Randomized suites
DEFAULT_SEED = int(os.getenv("MAXGENUS_SEED", "2012"))
RANDOM_WORD_SAMPLES = 1000
RANDOM_WORD_MAX_SYMBOLS = 8
RANDOM_CUBIC_SAMPLES = 50
RANDOM_CUBIC_MAX_ORDER = 12

# Exhaustive word census (all orientable words on up to this many symbols)
WORD_CENSUS_MAX_SYMBOLS = 4

# Family recognizers give up above this order
LADDER_RECOGNITION_MAX_ORDER = 24

# Output
PROGRESS_EVERY = 2048
DEFAULT_DB_PATH = os.getenv("MAXGENUS_DB_PATH", "data/reports.db")

# Symbols minted by the reduction transforms; user words may not use this prefix
FRESH_SYMBOL_PREFIX = "_c"
