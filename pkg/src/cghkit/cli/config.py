import dataclasses
from typing import List, Optional

from ..errors import CghError
from ..utils import cghkit_config

__all__ = ["RunConfig", "SchemaError", "SUBCOMMANDS", "VERIFY_VERBS", "OUTPUT_FORMATS"]

SUBCOMMANDS = ("construct", "detect", "extremal", "verify")

VERIFY_VERBS = (
    "ends-inequality",
    "injections",
    "coloring",
    "good-paths",
    "odd-reduction",
    "link-recursion",
    "bounds",
    "peeling",
    "recurrence",
)

OUTPUT_FORMATS = ("json", "csv")

# verbs that draw random colorings need a seed even on a supplied host
_SEEDED_VERBS = ("coloring", "good-paths")


class SchemaError(CghError, ValueError):
    pass


@dataclasses.dataclass
class RunConfig:
    subcommand: str
    target: Optional[str] = None
    n: List[int] = dataclasses.field(default_factory=list)
    r: List[int] = dataclasses.field(default_factory=list)
    k: List[int] = dataclasses.field(default_factory=list)
    pattern: List[str] = dataclasses.field(default_factory=list)
    abstract: bool = False
    reflection_closed: bool = False
    cyclic: bool = True
    mode: str = "exhaustive"
    seed: Optional[int] = None
    budget: Optional[int] = None
    use_symmetry: bool = True
    samples: Optional[int] = None
    p: Optional[float] = None
    count: Optional[int] = None
    x_count: Optional[int] = None
    input: Optional[str] = None
    output_dir: Optional[str] = None
    output_format: str = "json"

    def __post_init__(self):
        if self.output_dir is None:
            self.output_dir = cghkit_config.output_dir

    def single(self, name: str) -> int:
        values = getattr(self, name)
        if len(values) != 1:
            raise SchemaError(f"{self.subcommand} {self.target or ''} needs exactly one --{name}, got {values}")
        return values[0]

    @property
    def random_instances(self) -> bool:
        return self.input is None and self.count is not None

    def validate(self) -> "RunConfig":
        if self.subcommand not in SUBCOMMANDS:
            raise SchemaError(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise SchemaError(f"unknown output format {self.output_format!r}")
        if self.subcommand == "detect":
            if self.input is None:
                raise SchemaError("detect needs --input")
            if self.mode == "sampled" and self.seed is None:
                raise SchemaError("sampled stack detection needs --seed")
            if self.target == "good-path" and self.seed is None:
                raise SchemaError("good-path detection colors the host at random and needs --seed")
        if self.subcommand == "verify":
            if self.target not in VERIFY_VERBS:
                raise SchemaError(f"unknown verify verb {self.target!r}")
            if self.target != "bounds" and self.input is None and self.count is None:
                if not (self.n and self.r):
                    raise SchemaError(f"verify {self.target} needs --input, or --n and --r")
                # one sampled host when no count is given
                self.count = 1
            if (self.random_instances or self.target in _SEEDED_VERBS) and self.seed is None:
                raise SchemaError(f"verify {self.target} is stochastic and needs --seed")
        if self.subcommand == "extremal" and not (self.n and self.r and self.k and self.pattern):
            raise SchemaError("extremal needs --n, --r, --k and --pattern")
        if self.budget is not None and self.budget < 1:
            raise SchemaError(f"--budget must be positive, got {self.budget}")
        return self

    def to_json(self):
        return dataclasses.asdict(self)
