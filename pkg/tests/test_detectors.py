import pytest

from cghkit.constructions import stack_witness
from cghkit.core import complete_cgh
from cghkit.patterns import Coloring, list_detectors, lookup_detector


def test_registry_lists_every_detector():
    assert list_detectors() == ["good-path", "matching", "stack", "tight-path", "zigzag"]
    with pytest.raises(RuntimeError):
        lookup_detector("cycle")


def test_detectors_return_json_ready_witnesses(z_graph):
    tight = lookup_detector("tight-path")(complete_cgh(5, 3), 3)
    assert len(tight["seq"]) == 5
    zigzag = lookup_detector("zigzag")(z_graph, 3)
    assert zigzag["seq"] == [0, 3, 1, 2]
    assert zigzag["segments"] == [[0, 1], [2, 3]]
    stack = lookup_detector("stack")(stack_witness(12, 4, 3), 3)
    assert stack["edges"] == [[0, 5, 6, 11], [1, 4, 7, 10], [2, 3, 8, 9]]
    matching = lookup_detector("matching")(complete_cgh(4, 2), 2)
    assert matching == {"edges": [[0, 1], [2, 3]]}


def test_detectors_report_absence(z_graph):
    assert lookup_detector("zigzag")(z_graph, 4) is None
    assert lookup_detector("tight-path")(complete_cgh(5, 3), 4) is None


def test_good_path_detector_needs_coloring():
    detect = lookup_detector("good-path")
    coloring = Coloring((0, 0, 1, 1, 0, 0, 1, 1), 2)
    found = detect(complete_cgh(8, 4), 2, coloring=coloring)
    assert found is not None and found["coloring"]["s"] == 2
    with pytest.raises(ValueError):
        detect(complete_cgh(8, 4), 2)
