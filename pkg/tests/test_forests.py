import pytest

from src.complexes.degree import UNBOUNDED, finite
from src.complexes.forest import faces_of_dim, forest_complex, forest_faces, t_d
from src.config import settings
from src.graphs.families import generate_from_text
from src.graphs.forests import ForestSearch, induced_forest_check, star_free_bound
from src.graphs.graph import bits_of, edgeless, lex_key
from src.utils.errors import CapacityError, InputError
from src.verify.oracles import brute_force_forest_check, brute_force_t_d

BOUNDS = [finite(0), finite(1), finite(2), UNBOUNDED]


def test_induced_forest_check_on_cycle(c4):
    assert not induced_forest_check(c4, c4.full, UNBOUNDED)
    assert induced_forest_check(c4, bits_of([0, 1, 2]), UNBOUNDED)
    assert not induced_forest_check(c4, bits_of([0, 1, 2]), finite(1))
    assert induced_forest_check(c4, bits_of([0, 2]), finite(0))
    assert induced_forest_check(c4, 0, finite(0))
    with pytest.raises(InputError):
        induced_forest_check(c4, bits_of([7]), UNBOUNDED)


@pytest.mark.parametrize("d", BOUNDS, ids=str)
def test_induced_forest_check_matches_networkx(petersen, d):
    for s in range(1 << petersen.n):
        assert induced_forest_check(petersen, s, d) == brute_force_forest_check(petersen, s, d)


@pytest.mark.parametrize("text, d, expected", [
    ("petersen", finite(0), 4),
    ("complete:5", UNBOUNDED, 2),
    ("complete:5", finite(0), 1),
    ("cycle:7", UNBOUNDED, 6),
    ("cycle:6", finite(1), 4),
    ("empty:4", finite(0), 4),
])
def test_t_d(text, d, expected):
    assert t_d(generate_from_text(text), d) == expected


@pytest.mark.parametrize("d", BOUNDS, ids=str)
def test_t_d_matches_brute_force(petersen, d):
    assert t_d(petersen, d) == brute_force_t_d(petersen, d)


@pytest.mark.parametrize("text, expected", [("star:3", 4), ("complete:5", 2), ("cycle:6", 3), ("empty:3", 1)])
def test_star_free_bound(text, expected):
    assert star_free_bound(generate_from_text(text)) == expected


def test_walk_visits_faces_in_lex_order(c5):
    seen = []
    ForestSearch(c5, finite(1)).walk(lambda face, size, comps, deg: seen.append(face), c5.n)
    assert seen == sorted(seen, key=lex_key)
    assert len(seen) == 5 + 10 + 5


def test_forest_complex_facets():
    path = generate_from_text("path:3")
    assert forest_complex(path, finite(0)).facets == (0b101, 0b010)
    c4 = generate_from_text("cycle:4")
    assert forest_complex(c4, UNBOUNDED).facets == (0b0111, 0b1011, 0b1101, 0b1110)
    assert forest_complex(edgeless(3), finite(0)).facets == (0b111,)
    assert forest_complex(edgeless(0), UNBOUNDED).is_empty


@pytest.mark.parametrize("d", BOUNDS, ids=str)
def test_facets_are_largest_forests(petersen, d):
    k = forest_complex(petersen, d)
    assert k.dimension + 1 == t_d(petersen, d)
    for facet in k.facets:
        assert induced_forest_check(petersen, facet, d)


def test_faces_of_dim(c4):
    assert faces_of_dim(c4, UNBOUNDED, -1) == [0]
    assert faces_of_dim(c4, UNBOUNDED, 1) == [0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]
    assert faces_of_dim(c4, UNBOUNDED, 3) == []
    assert faces_of_dim(c4, UNBOUNDED, 7) == []


def test_face_enumeration_agrees_with_facets(petersen):
    k = forest_complex(petersen, finite(1))
    by_size = forest_faces(petersen, finite(1), range(0, petersen.n + 1))
    assert [len(by_size[size]) for size in range(0, k.dimension + 2)] == k.f_vector()


def test_parallel_enumeration_keeps_order(petersen):
    sizes = range(0, 5)
    assert forest_faces(petersen, finite(1), sizes, jobs=2) == forest_faces(petersen, finite(1), sizes)


def test_budgets_raise_capacity_errors(petersen, c5):
    with pytest.raises(CapacityError):
        forest_complex(petersen, UNBOUNDED, max_facets=1)
    settings.override_budget(max_faces_per_dim=3)
    with pytest.raises(CapacityError) as excinfo:
        forest_faces(c5, UNBOUNDED, [2])
    assert excinfo.value.limit == 3
