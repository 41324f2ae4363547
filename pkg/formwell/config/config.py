# config.py at the project source code root
import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _float_setting(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = float(raw)
    except ValueError as exc:
        raise ValueError(f"Invalid value for {name}: {raw!r}") from exc
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {raw!r}")
    return value


# Logging configuration
LOG_LEVEL = os.environ.get("FORMWELL_LOG_LEVEL", "WARNING")
LOG_FILE = os.environ.get("FORMWELL_LOG_FILE") or None

# Finite-difference oracle for the Wirtinger derivatives
FD_STEP = _float_setting("FORMWELL_FD_STEP", 1e-5)
FD_RTOL = _float_setting("FORMWELL_FD_RTOL", 1e-6)
FD_ATOL = _float_setting("FORMWELL_FD_ATOL", 1e-9)

# Finite-difference oracle for the second-order operators
LAPLACE_STEP = _float_setting("FORMWELL_LAPLACE_STEP", 1e-3)
LAPLACE_RTOL = _float_setting("FORMWELL_LAPLACE_RTOL", 1e-4)
LAPLACE_ATOL = _float_setting("FORMWELL_LAPLACE_ATOL", 1e-4)

# Get the absolute path of the current file (config.py)
CURRENT_FILE_PATH = os.path.abspath(__file__)

# Get the project root directory (two levels up from config.py)
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(CURRENT_FILE_PATH)))

# Define other paths relative to the project root
PROJECT_SOURCE_ROOT = os.path.join(PROJECT_ROOT, "formwell")
PROJECT_TEST_ROOT = os.path.join(PROJECT_ROOT, "test")
TEST_PROBLEMS_PATH = os.path.join(PROJECT_TEST_ROOT, "problems")
