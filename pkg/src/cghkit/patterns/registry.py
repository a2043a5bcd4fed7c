from ..utils.registry import Registry

__all__ = ["DETECTORS", "register_detector", "lookup_detector", "list_detectors"]

# detectors are ``fn(H, k, **options) -> Optional[witness]``
DETECTORS = Registry("detector", "cghkit.patterns")

register_detector = DETECTORS.register
lookup_detector = DETECTORS.lookup
list_detectors = DETECTORS.names
