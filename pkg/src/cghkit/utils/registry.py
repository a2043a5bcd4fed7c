import functools
import importlib
import os
from typing import Callable, Dict, List, Optional, Sequence, Tuple

__all__ = ["Registry"]


class Registry:
    """Named callables of one kind, filled by decorators in ``package``.

    Lookups import every public submodule of ``package`` once, so a name is
    found even when the module defining it has not been imported yet.
    """

    def __init__(self, kind: str, package: str):
        self.kind = kind
        self.package = package
        self._entries: Dict[str, Callable] = {}
        self._tags: Dict[str, Tuple[str, ...]] = {}
        self._loaded = False

    def register(self, name: Optional[str] = None, tags: Sequence[str] = ()):
        def wrapper(fn: Optional[Callable] = None):
            if fn is None:
                return functools.partial(self.register, name=name, tags=tags)
            assert callable(fn)
            fname = name or fn.__name__
            assert fname not in self._entries, f"duplicate {self.kind} name: {fname}"
            self._entries[fname] = fn
            self._tags[fname] = tuple(tags)
            return fn

        return wrapper

    def _lazy_import(self):
        if self._loaded:
            return
        self._loaded = True
        package = importlib.import_module(self.package)
        for filename in sorted(os.listdir(os.path.dirname(package.__file__))):
            if filename.endswith(".py") and filename[0] != "_":
                importlib.import_module(f"{self.package}.{filename[:-3]}")

    def lookup(self, fn):
        """Expand a registered name to its function; callables pass through."""
        if isinstance(fn, str):
            if fn not in self._entries:
                self._lazy_import()
            if fn not in self._entries:
                raise RuntimeError(f"invalid {self.kind} {fn}")
            fn = self._entries[fn]
        return fn

    def names(self, tag: Optional[str] = None) -> List[str]:
        self._lazy_import()
        return sorted(n for n in self._entries if tag is None or tag in self._tags[n])

    def tags(self, name: str) -> Tuple[str, ...]:
        self.lookup(name)
        return self._tags[name]

    def describe(self) -> str:
        """One ``name [tags]`` item per entry, for command-line help."""
        items = []
        for name in self.names():
            tags = self._tags[name]
            items.append(f"{name} [{', '.join(tags)}]" if tags else name)
        return "; ".join(items)
