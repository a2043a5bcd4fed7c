"""Typed access to the ``CGHKIT_*`` environment variables."""
import os
from typing import Any, Callable, Dict, Optional

_TRUE = ("1", "true", "yes", "on", "y")
_FALSE = ("0", "false", "no", "off", "n")


def _to_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"expected one of {_TRUE + _FALSE}, got {text!r}")


_READERS: Dict[type, Callable[[str], Any]] = {bool: _to_bool, int: int, str: str}
_WRITERS: Dict[type, Callable[[Any], str]] = {
    bool: lambda value: "1" if value else "0",
    int: lambda value: str(int(value)),
    str: str,
}


def env_kind(annotation) -> type:
    """``bool``, ``int`` or ``str`` for a field annotated ``T`` or ``Optional[T]``."""
    for kind in _READERS:
        if annotation in (kind, Optional[kind]):
            return kind
    raise ValueError(f"Unsupported type {annotation}")


def read_env(env_var: str, kind: type, default=None):
    """Value of ``env_var`` converted to ``kind``; unset or empty gives ``default``."""
    text = os.getenv(env_var)
    if text is None or text == "":
        return default
    try:
        return _READERS[kind](text)
    except ValueError as e:
        raise ValueError(f"{env_var}: {e}") from e


def write_env(env_var: str, kind: type, value) -> None:
    if value is None:
        os.environ.pop(env_var, None)
    else:
        os.environ[env_var] = _WRITERS[kind](value)
