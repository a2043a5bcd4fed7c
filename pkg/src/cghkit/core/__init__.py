from .ground import CyclicGround, Segment, in_segment, ell
from .hypergraph import Edge, Cgh, shadow, link, neighborhood, complete_cgh
from .io import dumps_cgh, loads_cgh, read_cgh
