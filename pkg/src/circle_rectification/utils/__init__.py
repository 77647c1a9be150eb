# Utility modules
from .run_logger import RunLogger
