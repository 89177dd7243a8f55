import os
from typing import Optional
from dotenv import load_dotenv

from .logger import get_logger


class Config:
    def __init__(self, config_path: Optional[str] = None):
        if config_path:
            load_dotenv(config_path)
        else:
            load_dotenv()

        # Logging
        self.log_level = os.getenv("LOG_LEVEL", "INFO")
        self.log_file = os.getenv("RZR_LOG_FILE") or None

        # Numeric certification
        self.guard_digits = int(os.getenv("RZR_GUARD_DIGITS", "10"))
        self.default_precision = int(os.getenv("RZR_DEFAULT_PRECISION", "60"))
        self.pole_threshold = os.getenv("RZR_POLE_THRESHOLD", "1e-20")

        # Exact side
        self.cross_check_max_m = int(os.getenv("RZR_CROSS_CHECK_MAX_M", "6"))

        # Progress bars go to stderr
        self.progress = os.getenv("RZR_PROGRESS", "false").lower() == "true"

    def validate(self) -> bool:
        problems = []

        if self.guard_digits < 0:
            problems.append("RZR_GUARD_DIGITS")
        if self.default_precision < 10:
            problems.append("RZR_DEFAULT_PRECISION")
        if self.cross_check_max_m < 0:
            problems.append("RZR_CROSS_CHECK_MAX_M")
        try:
            if float(self.pole_threshold) <= 0:
                problems.append("RZR_POLE_THRESHOLD")
        except ValueError:
            problems.append("RZR_POLE_THRESHOLD")

        if problems:
            get_logger("config").error(f"Invalid configuration: {', '.join(problems)}")
            return False

        return True

    def to_dict(self) -> dict:
        return {
            "log_level": self.log_level,
            "log_file": self.log_file,
            "guard_digits": self.guard_digits,
            "default_precision": self.default_precision,
            "pole_threshold": self.pole_threshold,
            "cross_check_max_m": self.cross_check_max_m,
            "progress": self.progress,
        }
