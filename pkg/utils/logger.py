import logging
import os
import sys
from utils.config import Config

class Logger:
    def __init__(self, log_file=None):
        self.logger = logging.getLogger("VGITWallCrossing")
        self.logger.setLevel(getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO))

        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

        # stdout carries reports, so the console handler writes to stderr
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)

        handlers = [console_handler]
        log_file = Config.LOG_FILE if log_file is None else log_file
        if log_file:
            os.makedirs(Config.LOG_DIR, exist_ok=True)
            file_handler = logging.FileHandler(os.path.join(Config.LOG_DIR, log_file))
            file_handler.setFormatter(formatter)
            handlers.append(file_handler)

        # Add handlers if not already added
        if not self.logger.handlers:
            for handler in handlers:
                self.logger.addHandler(handler)

    def get_logger(self):
        return self.logger


logger = Logger().get_logger()
