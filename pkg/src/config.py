import os

from dotenv import load_dotenv

load_dotenv()

# Limits and runtime settings from environment variables
MAX_SIMPLICES = int(os.getenv('WPH_MAX_SIMPLICES', '5000'))
MAX_WORKERS = int(os.getenv('WPH_MAX_WORKERS', '4'))

# Logging locations
APP_NAME = os.getenv('WPH_APP_NAME', 'weighted_homology')
LOG_DIR = os.getenv('WPH_LOG_DIR', 'logs')
ERROR_LOG_DIR = os.getenv('WPH_ERROR_LOG_DIR', os.path.join(LOG_DIR, 'errors'))


def get_max_simplices() -> int:
    """Current simplex cap, re-read so tests can override the environment."""
    return int(os.getenv('WPH_MAX_SIMPLICES', str(MAX_SIMPLICES)))
