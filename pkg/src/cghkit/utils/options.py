import dataclasses
from typing import Optional

from .env_var import env_kind, read_env, write_env


@dataclasses.dataclass
class SearchOptions:
    budget: int = 2_000_000
    use_symmetry: bool = True
    # "include" explores the include-branch first (strong incumbents early)
    branch_order: str = "include"


@dataclasses.dataclass
class SamplingOptions:
    samples: int = 100_000
    tolerance_se: int = 3
    batch_size: int = 10_000


@dataclasses.dataclass
class HarnessOptions:
    count: int = 200
    p: float = 0.3
    master_seed: Optional[int] = None


@dataclasses.dataclass
class CghkitConfig:
    debug: Optional[bool] = None
    output_dir: Optional[str] = None
    log_dir: Optional[str] = None
    node_budget: Optional[int] = None
    exhaustive_colorings: Optional[int] = None

    attr2env_var = {
        "debug": "CGHKIT_DEBUG",
        "output_dir": "CGHKIT_OUTPUT_DIR",
        "log_dir": "CGHKIT_LOG_DIR",
        "node_budget": "CGHKIT_NODE_BUDGET",
        "exhaustive_colorings": "CGHKIT_EXHAUSTIVE_COLORINGS",
    }

    defaults = {
        "debug": False,
        "output_dir": "./output",
        "log_dir": None,
        "node_budget": SearchOptions.budget,
        "exhaustive_colorings": 2 ** 12,
    }

    def _kind(self, name):
        return env_kind({field.name: field for field in dataclasses.fields(self)}[name].type)

    def __post_init__(self):
        for name, env_var in self.attr2env_var.items():
            value = read_env(env_var, self._kind(name), self.defaults[name])
            super().__setattr__(name, value)

        super().__setattr__("_initialized", True)

    def __setattr__(self, name, value):
        super().__setattr__(name, value)
        if getattr(self, "_initialized", False) and name in self.attr2env_var:
            write_env(self.attr2env_var[name], self._kind(name), value)


cghkit_config = CghkitConfig()
