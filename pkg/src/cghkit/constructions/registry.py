from ..utils.registry import Registry

__all__ = ["CONSTRUCTIONS", "register_construction", "lookup_construction", "list_constructions"]

# generators are ``fn(**params) -> ConstructionReport``; tags name the pattern avoided
CONSTRUCTIONS = Registry("construction", "cghkit.constructions")

register_construction = CONSTRUCTIONS.register
lookup_construction = CONSTRUCTIONS.lookup
list_constructions = CONSTRUCTIONS.names
