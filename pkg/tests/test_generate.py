"""Generation: known counts pin isomorph-freeness and completeness."""

import pytest

from etdom import GraphError, enumerate_circulants, generate_connected
from etdom._kernel import BACKEND
from etdom.canon import canonical_form
from etdom.generate import GenerationBudgetError, graph_layers
from etdom.graph6 import decode
from etdom.graphs import is_connected, is_cubic, is_maximal_triangle_free, is_triangle_free

# unlabelled graph counts, connected and all, per order
CONNECTED_ALL = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]
TOTAL_ALL = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
TOTAL_TRIANGLE_FREE = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172, 105071]
CONNECTED_TRIANGLE_FREE = [1, 1, 1, 3, 6, 19, 59, 267, 1380, 9832, 90842]
CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}
CONNECTED_MTF = {5: 3, 7: 6, 9: 16}

SLOW_N_ALL = 9 if BACKEND == "fast" else 8
SLOW_N_TF = 11 if BACKEND == "fast" else 9
SLOW_N_CUBIC = 14 if BACKEND == "fast" else 10


def test_connected_counts():
    for n in range(1, SLOW_N_ALL + 1):
        assert sum(1 for _ in generate_connected(n)) == CONNECTED_ALL[n - 1]


def test_layer_totals_include_disconnected():
    for layers_seen, layer in enumerate(graph_layers(8, "all"), start=1):
        assert len(layer) == TOTAL_ALL[layers_seen - 1]


def test_triangle_free_layer_totals():
    for n, layer in enumerate(graph_layers(min(SLOW_N_TF, 10), "triangle_free"), start=1):
        assert len(layer) == TOTAL_TRIANGLE_FREE[n - 1]
        if n <= 7:
            for line in layer:
                assert is_triangle_free(decode(line))


def test_triangle_free_connected_counts():
    for n in range(1, SLOW_N_TF + 1):
        got = sum(1 for _ in generate_connected(n, "triangle_free"))
        assert got == CONNECTED_TRIANGLE_FREE[n - 1]


def test_maximal_triangle_free_counts():
    for n, want in CONNECTED_MTF.items():
        graphs = list(generate_connected(n, "maximal_triangle_free"))
        assert len(graphs) == want
        assert all(is_maximal_triangle_free(g) for g in graphs)


def test_cubic_counts():
    for n, want in CONNECTED_CUBIC.items():
        if n > SLOW_N_CUBIC:
            continue
        graphs = list(generate_connected(n, "cubic"))
        assert len(graphs) == want
        assert all(is_cubic(g) and is_connected(g) for g in graphs)


def test_cubic_odd_or_tiny_is_empty():
    assert list(generate_connected(5, "cubic")) == []
    assert list(generate_connected(2, "cubic")) == []


def test_no_duplicates_and_constraints():
    for constraint, n in (("all", 7), ("triangle_free", 8)):
        forms = [canonical_form(g) for g in generate_connected(n, constraint)]
        assert len(forms) == len(set(forms))
    for g in generate_connected(8, "triangle_free"):
        assert is_triangle_free(g) and is_connected(g)


def test_generation_deterministic():
    a = [canonical_form(g) for g in generate_connected(7)]
    b = [canonical_form(g) for g in generate_connected(7)]
    assert a == b


def test_generation_parallel_matches_serial():
    serial = [canonical_form(g) for g in generate_connected(7, workers=1)]
    parallel = [canonical_form(g) for g in generate_connected(7, workers=4)]
    assert serial == parallel


def test_budget_refused():
    with pytest.raises(GenerationBudgetError):
        next(generate_connected(11, "all"))
    with pytest.raises(GenerationBudgetError):
        next(generate_connected(16, "triangle_free", allow_large=True))
    with pytest.raises(GraphError):
        next(generate_connected(5, "nonsense"))


def test_enumerate_circulants_examples():
    labels4 = [s.label() for s in enumerate_circulants(4)]
    assert labels4 == ["C4[1]", "C4[1,2]"]
    labels5 = [s.label() for s in enumerate_circulants(5)]
    assert labels5 == ["C5[1]", "C5[1,2]"]
    labels13 = [s.label() for s in enumerate_circulants(13)]
    assert "C13[1,3,4]" in labels13 and "C13[1,2,3,5]" in labels13


def test_enumerate_circulants_isomorph_free():
    for n in (8, 12, 15):
        specs = enumerate_circulants(n)
        from etdom.constructions import circulant

        forms = [canonical_form(circulant(s)) for s in specs]
        assert len(forms) == len(set(forms))
        assert all(is_connected(circulant(s)) for s in specs)
