import logging
import sys
import time
from pathlib import Path
from typing import Optional, Union

DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ColorFormatter(logging.Formatter):
    COLORS = {
        "DEBUG": "\033[34m",  # Blue
        "INFO": "\033[92m",  # green
        "WARNING": "\033[93m",  # Yellow
        "ERROR": "\033[91m",  # Red
        "CRITICAL": "\033[91m",  # Red
    }

    def format(self, record):
        message = super().format(record)
        color = self.COLORS.get(record.levelname)
        return f"{color}{message}\033[0m" if color else message


class ConfigurableLogger:
    """Proxy around the ``cghkit`` logger that can be reconfigured after import.

    Modules keep the module-level ``logger`` and log through it after the CLI
    (or a test) calls ``configure_logging``. Handlers installed here are tagged,
    so configuring twice replaces them instead of duplicating output.
    """

    _TAG = "_cghkit_handler"

    def __init__(self) -> None:
        self.logger = logging.getLogger("cghkit")

    def __getattr__(self, name):
        return getattr(self.logger, name)

    def _drop_handlers(self, logger: logging.Logger):
        for handler in list(logger.handlers):
            if getattr(handler, self._TAG, False):
                logger.removeHandler(handler)
                handler.close()

    def _add(self, logger: logging.Logger, handler: logging.Handler, formatter):
        handler.setFormatter(formatter)
        setattr(handler, self._TAG, True)
        logger.addHandler(handler)

    def configure_logging(
        self,
        name: str,
        level: Union[int, str],
        log_dir: Optional[Union[str, Path]] = None,
        file_name: Optional[str] = None,
    ) -> Optional[Path]:
        """Log ``name`` to stderr and, with ``log_dir``, to a timestamped file.

        Returns the log file path when one was opened.
        """
        logger = logging.getLogger(name)
        logger.setLevel(level)
        self._drop_handlers(logger)

        # stderr, so the one-line summary on stdout stays parseable
        stream = sys.stderr
        formatter_cls = ColorFormatter if stream.isatty() else logging.Formatter
        self._add(
            logger,
            logging.StreamHandler(stream),
            formatter_cls(
                fmt="%(levelname)s [%(asctime)s] %(name)s:%(lineno)d - %(message)s",
                datefmt=DATE_FORMAT,
            ),
        )

        log_file = None
        if log_dir:
            log_dir = Path(log_dir)
            log_dir.mkdir(parents=True, exist_ok=True)
            stamp = time.strftime("%Y-%m-%d_%H-%M-%S", time.localtime())
            log_file = log_dir / f"{stamp}_{file_name or name + '.log'}"
            self._add(
                logger,
                logging.FileHandler(log_file, encoding="utf-8"),
                logging.Formatter(fmt="%(levelname)s [%(asctime)s] - %(message)s", datefmt=DATE_FORMAT),
            )

        self.logger = logger
        return log_file


logger = ConfigurableLogger()
