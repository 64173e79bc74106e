import math

import numpy as np
import pytest

from src.complexes.complex import VOID, cone, empty_complex, sphere_boundary, suspension
from src.complexes.degree import UNBOUNDED, finite
from src.complexes.forest import forest_complex
from src.config import settings
from src.graphs.families import generate_from_text
from src.graphs.graph import edgeless
from src.homology.boundary import boundary_matrix, build_boundary, export_triplets
from src.homology.compute import (
    parse_dims, reduced_cohomology_of_complex, reduced_homology, reduced_homology_of_complex, relative_homology,
)
from src.homology.profile import (
    HomologyGroup, HomologyProfile, WedgeDescriptor, WedgeRejection, homological_connectivity, profile_as_wedge,
)
from src.utils.errors import CapacityError, InputError


def test_homology_group_normalizes_torsion():
    group = HomologyGroup(2, (3, 2))
    assert group.torsion == (6,)
    assert str(group) == "Z^2 + Z/6"
    assert str(HomologyGroup()) == "0"
    with pytest.raises(InputError):
        HomologyGroup(-1)


def test_profile_arithmetic():
    p = HomologyProfile.from_wedge({1: 2, 3: 1})
    assert p.euler() == -3
    assert p.shifted(1).betti(4) == 1
    assert (p + p).betti(1) == 4
    assert p.describe() == "H1=Z^2, H3=Z"
    assert p.restricted(0, 2).nonzero_dims() == [1]
    assert p.first_difference(HomologyProfile.from_wedge({1: 2})) == 3
    assert HomologyProfile({0: HomologyGroup()}).same_as(HomologyProfile())


def test_profile_json_dict():
    p = HomologyProfile({1: HomologyGroup(0, (2,)), 2: HomologyGroup(1)})
    data = p.to_json_dict()
    assert data == {"dims": {"1": {"betti": 0, "torsion": [2]}, "2": {"betti": 1, "torsion": []}}, "euler": 1}
    assert HomologyProfile.from_json_dict(data).same_as(p)


def test_wedge_view_and_connectivity():
    assert profile_as_wedge(HomologyProfile.from_wedge({2: 3})) == WedgeDescriptor({2: 3})
    assert isinstance(profile_as_wedge(HomologyProfile({1: HomologyGroup(0, (2,))})), WedgeRejection)
    assert profile_as_wedge(HomologyProfile.from_wedge({2: 3})).to_profile().same_as(HomologyProfile.from_wedge({2: 3}))
    assert HomologyProfile({1: HomologyGroup(0, (2,))}).has_torsion()
    assert not HomologyProfile.from_wedge({2: 3}).has_torsion()
    assert homological_connectivity(HomologyProfile.from_wedge({2: 1})) == 1
    assert homological_connectivity(HomologyProfile()) == math.inf
    assert homological_connectivity(HomologyProfile.empty_complex()) == -2


def test_wedge_view_needs_a_connected_nonempty_complex():
    k2 = generate_from_text("complete:2")
    rejection = profile_as_wedge(reduced_homology(k2, finite(0)))
    assert rejection == WedgeRejection(0, "disconnected complex: H_0 = Z")
    assert profile_as_wedge(HomologyProfile.empty_complex()).dimension == -1
    assert profile_as_wedge(reduced_homology(edgeless(0), UNBOUNDED)).dimension == -1
    # the void complex has no homology at all and reads as the empty wedge
    assert profile_as_wedge(reduced_homology_of_complex(VOID)) == WedgeDescriptor({})
    assert profile_as_wedge(reduced_homology(k2, finite(1))) == WedgeDescriptor({})


def test_parse_dims():
    assert parse_dims("0..4") == (0, 4)
    assert parse_dims("3") == (3, 3)
    assert parse_dims("-1..0") == (-1, 0)
    for bad in ("4..2", "x", "-3..1"):
        with pytest.raises(InputError):
            parse_dims(bad)


def test_boundary_signs_and_triplets():
    matrix = build_boundary([0b001, 0b010, 0b100], [0b011, 0b101, 0b110], 1)
    assert matrix.to_dense().tolist() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    assert export_triplets(matrix) == "3 3 6\n0 0 -1\n1 0 1\n0 1 -1\n2 1 1\n1 2 -1\n2 2 1\n"


def test_boundary_squares_to_zero(petersen):
    for q in (0, 1, 2):
        d_q = boundary_matrix(petersen, finite(1), q).to_dense()
        d_next = boundary_matrix(petersen, finite(1), q + 1).to_dense()
        assert not np.any(d_q @ d_next)


def test_boundary_budget():
    settings.override_budget(max_matrix_entries=3)
    with pytest.raises(CapacityError):
        build_boundary([0b001, 0b010, 0b100], [0b011, 0b101, 0b110], 1)


def test_spheres_and_special_complexes():
    assert reduced_homology_of_complex(sphere_boundary(3)).nonzero_dims() == [2]
    assert reduced_homology_of_complex(suspension(sphere_boundary(2))).betti(2) == 1
    assert reduced_homology_of_complex(cone(sphere_boundary(2))).is_zero()
    assert reduced_homology_of_complex(VOID).is_zero()
    assert reduced_homology_of_complex(empty_complex(2)).same_as(HomologyProfile.empty_complex())


def test_forest_complex_of_cycles(c5):
    assert reduced_homology(c5, UNBOUNDED).same_as(HomologyProfile.from_wedge({3: 1}))
    assert reduced_homology(c5, finite(1)).same_as(HomologyProfile.from_wedge({1: 1}))
    c8 = generate_from_text("cycle:8")
    assert reduced_homology(c8, finite(1), (0, 4)).betti(3) == 3


def test_empty_graph_gives_the_empty_complex():
    assert reduced_homology(edgeless(0), UNBOUNDED).same_as(HomologyProfile.empty_complex())


def test_window_matches_full_computation(petersen):
    full = reduced_homology(petersen, finite(1))
    window = reduced_homology(petersen, finite(1), (1, 2))
    assert window.restricted(1, 2).same_as(full.restricted(1, 2))


def test_parallel_homology_matches_serial(petersen):
    assert reduced_homology(petersen, finite(2), jobs=2).same_as(reduced_homology(petersen, finite(2)))


def test_rp2_independence_complex_has_two_torsion():
    rp2 = generate_from_text("rp2")
    homology = reduced_homology(rp2, finite(0))
    assert homology.torsion(1) == (2,)
    assert homology.betti(1) == 0 and homology.betti(2) == 0
    cohomology = reduced_cohomology_of_complex(forest_complex(rp2, finite(0)))
    assert cohomology.torsion(2) == (2,)
    assert cohomology.torsion(1) == ()


def test_relative_homology_of_the_filtration(c4):
    relative = relative_homology(c4, finite(1), UNBOUNDED)
    assert relative.same_as(HomologyProfile.from_wedge({2: 4}))
    assert relative_homology(c4, finite(1), finite(1)).is_zero()
    with pytest.raises(InputError):
        relative_homology(c4, UNBOUNDED, finite(1))


def test_prefilter_agrees(petersen):
    settings.override_budget(prefilter_max_entries=10 ** 6)
    assert reduced_homology(petersen, finite(1)).same_as(reduced_homology(petersen, finite(1)))


def test_euler_characteristic_matches_betti_numbers(petersen):
    for d in (finite(0), finite(1), UNBOUNDED):
        k = forest_complex(petersen, d)
        assert k.euler_characteristic() == reduced_homology_of_complex(k).euler()
