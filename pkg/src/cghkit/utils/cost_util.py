import inspect
import time
from functools import wraps
from typing import Optional

from .log_utils import logger
from .options import cghkit_config

__all__ = ["cost_time"]


class cost_time:
    """Time a code range, as a context manager or a decorator.

    With ``debug=None`` the switch is ``cghkit_config.debug`` at the moment the
    range runs, so ``CGHKIT_DEBUG`` set after import still takes effect.
    ``elapsed`` holds the last measured duration in seconds.
    """

    def __init__(self, message: str = "\t", debug: Optional[bool] = None):
        self.message = message
        self.debug = debug
        self.elapsed: Optional[float] = None

    def _enabled(self) -> bool:
        return bool(cghkit_config.debug if self.debug is None else self.debug)

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self.start_time
        if self._enabled():
            status = "failed" if exc_type is not None else "done"
            logger.debug(f"{self.message} {status} in {self.elapsed:.3f} s")

    def __call__(self, func):
        @wraps(func)
        def clocked(*args, **kwargs):
            if not self._enabled():
                return func(*args, **kwargs)
            module = inspect.getmodule(func)
            name = f"{module.__name__}.{func.__name__}" if module else func.__name__
            logger.debug(f"==> {name} ({self.message}) started")
            with self:
                out = func(*args, **kwargs)
            return out

        return clocked
