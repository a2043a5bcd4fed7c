import dataclasses
from fractions import Fraction
from typing import Any, Dict, Union

from ..utils import logger

__all__ = ["BoundReport", "Number"]

Number = Union[int, Fraction]


@dataclasses.dataclass(frozen=True)
class BoundReport:
    """``lhs <= rhs`` evaluated exactly; lower bounds are stated with sides swapped."""

    name: str
    lhs: Number
    rhs: Number
    holds: bool
    context: Dict[str, Any] = dataclasses.field(default_factory=dict)

    @classmethod
    def compare(cls, name: str, lhs: Number, rhs: Number, **context) -> "BoundReport":
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        report = cls(name, lhs, rhs, lhs <= rhs, context)
        if not report.holds:
            logger.warning(f"bound {name} violated: {report.to_json()}")
        return report

    def to_json(self):
        return {
            "name": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "context": self.context,
        }
