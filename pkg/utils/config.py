import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    """Configuration settings for the project."""

    # Schema versions
    REPORT_SCHEMA_VERSION = 1
    INPUT_SCHEMA_VERSION = 1

    # Exact lattice oracle
    BRUTE_FORCE_RADIUS = int(os.getenv("VGIT_BRUTE_FORCE_RADIUS", "25"))

    # Randomized corpora
    CORPUS_SEED = int(os.getenv("VGIT_CORPUS_SEED", "20130"))
    CORPUS_SIZE = int(os.getenv("VGIT_CORPUS_SIZE", "200"))
    CORPUS_MAX_COLUMNS = 8
    CORPUS_MAX_ENTRY = 4
    BRAID_CORPUS_SIZE = 1000
    TWIST_MUTATION_CORPUS_SIZE = 500
    FACTORIZATION_CORPUS_SIZE = 300
    WINDOW_SHIFT_CORPUS_SIZE = 300

    # Near-wall characters: doublings of K tried past the orientation bound
    NEAR_WALL_MAX_DOUBLINGS = 40

    # Logging Configuration
    LOG_LEVEL = os.getenv("VGIT_LOG_LEVEL", "INFO")
    LOG_DIR = "logs"
    LOG_FILE = os.getenv("VGIT_LOG_FILE", "vgit.log")
