import math

import pytest

from src.graphs.families import generate_from_text
from src.graphs.graph import bits_of
from src.graphs.structure import block_decomposition, girth, random_cactus, random_graph, vertices_on_cycles
from src.utils.errors import InputError


@pytest.mark.parametrize("text, expected", [
    ("cycle:5", 5),
    ("cycle:9", 9),
    ("complete:4", 3),
    ("petersen", 5),
    ("ladder:4", 4),
    ("bipartite:3,3", 4),
    ("path:6", math.inf),
    ("empty:3", math.inf),
])
def test_girth(text, expected):
    assert girth(generate_from_text(text)) == expected


def test_vertices_on_cycles():
    assert vertices_on_cycles(generate_from_text("doublestar:2,2")) == 0
    bowtie = generate_from_text("bowtie")
    assert vertices_on_cycles(bowtie) == bowtie.full
    g = generate_from_text("cyclechord:1,1")
    assert vertices_on_cycles(g) == g.full


def test_bowtie_blocks():
    decomposition = block_decomposition(generate_from_text("bowtie"))
    assert decomposition.b == 2
    assert decomposition.cut_vertices == 1
    assert decomposition.is_cactus
    assert decomposition.all_cycles
    assert decomposition.sb == 0


def test_path_blocks_and_saturation():
    decomposition = block_decomposition(generate_from_text("path:4"))
    assert decomposition.b == 3
    assert decomposition.bridges == ((0, 1), (1, 2), (2, 3))
    assert decomposition.cut_vertices == bits_of([1, 2])
    assert decomposition.saturated_blocks == (bits_of([1, 2]),)
    assert decomposition.sv == 0


def test_non_cactus():
    assert not block_decomposition(generate_from_text("complete:4")).is_cactus
    assert not block_decomposition(generate_from_text("cyclechord:2,2")).is_cactus


@pytest.mark.parametrize("seed", range(8))
def test_random_cactus(seed):
    g = random_cactus(seed, 5, 5)
    decomposition = block_decomposition(g)
    assert decomposition.is_cactus
    assert decomposition.b == 5
    assert len(g.components()) == 1


def test_random_cactus_rejects_bad_sizes():
    with pytest.raises(InputError):
        random_cactus(0, 0, 4)
    with pytest.raises(InputError):
        random_cactus(0, 3, 2)


def test_random_graph_extremes():
    assert random_graph(1, 6, 0.0).edge_count() == 0
    assert random_graph(1, 6, 1.0).edge_count() == 15
    with pytest.raises(InputError):
        random_graph(1, 4, 1.5)
