__version__ = "0.1.0"
__author__ = "cghkit"
__credits__ = "cghkit contributors"

from .errors import (
    CghError,
    VertexRangeError,
    UniformityError,
    PatternDomainError,
    PatternPresentError,
    ConstructionParameterError,
    CghFormatError,
    BudgetExhaustedError,
)
from .core import CyclicGround, Cgh, Segment, dumps_cgh, loads_cgh, read_cgh
from .utils import cghkit_config
