import pytest

from src.complexes.complex import (
    VOID, SimplicialComplex, add_cone, alexander_dual, cone, deletion, empty_complex, from_faces, join_complex, link,
    minimal_nonfaces, relabel, simplex, skeleton, sphere_boundary, star, suspension, void_complex,
)
from src.complexes.degree import UNBOUNDED, DegreeBound, finite
from src.config import settings
from src.graphs.graph import bits_of
from src.utils.errors import CapacityError, InputError

TWO_POINTS = SimplicialComplex(2, (0b01, 0b10))


def test_degree_bound_parsing_and_order():
    assert DegreeBound.parse("inf") == UNBOUNDED
    assert DegreeBound.parse(" 3 ") == finite(3)
    assert finite(0) < finite(1) < UNBOUNDED
    assert max(finite(4), UNBOUNDED) == UNBOUNDED
    assert str(UNBOUNDED) == "inf" and str(finite(2)) == "2"
    assert finite(2).succ() == finite(3) and UNBOUNDED.succ() == UNBOUNDED
    assert finite(2).allows(2) and not finite(2).allows(3)
    for bad in ("-1", "two", "1.5"):
        with pytest.raises(InputError):
            DegreeBound.parse(bad)


def test_facets_are_sorted_antichain():
    k = SimplicialComplex(4, (bits_of([2, 3]), bits_of([0, 1, 2])))
    assert k.facets == (bits_of([0, 1, 2]), bits_of([2, 3]))
    with pytest.raises(InputError):
        SimplicialComplex(3, (bits_of([0, 1]), bits_of([0])))
    with pytest.raises(InputError):
        SimplicialComplex(3, (0b11, 0b11))
    with pytest.raises(InputError):
        SimplicialComplex(2, (bits_of([2]),))


def test_void_and_empty_complexes():
    assert VOID.is_void and VOID.dimension is None and VOID.f_vector() == []
    empty = empty_complex(3)
    assert empty.is_empty and empty.dimension == -1
    assert empty.f_vector() == [1]
    assert empty.euler_characteristic() == -1
    assert void_complex(3).faces(0) == []


def test_f_vector_and_euler_of_spheres():
    circle = sphere_boundary(2)
    assert circle.f_vector() == [1, 3, 3]
    assert circle.euler_characteristic() == -1
    assert sphere_boundary(3).euler_characteristic() == 1


def test_faces_in_lex_order_and_budget():
    k = simplex(4, 0b1111)
    assert k.faces(1)[:3] == [0b0011, 0b0101, 0b1001]
    assert k.is_face(0b0110) and not SimplicialComplex(4, (0b0011,)).is_face(0b0110)
    with pytest.raises(CapacityError):
        simplex(6, 0b111111).faces(2, limit=5)


def test_from_faces_keeps_maximal_sets():
    assert from_faces(3, [0b011, 0b001, 0b110, 0]).facets == (0b011, 0b110)
    assert from_faces(3, [0]).is_empty
    assert from_faces(3, []).is_void


def test_skeleton_link_star_deletion():
    triangle = simplex(3, 0b111)
    assert skeleton(triangle, 1) == sphere_boundary(2)
    assert skeleton(triangle, -1).is_empty
    circle = sphere_boundary(2)
    assert link(circle, 0b001).facets == (0b010, 0b100)
    assert link(circle, 0b111).is_void
    assert star(circle, 0b001).facets == (0b011, 0b101)
    assert deletion(circle, 0b001).facets == (0b110,)


def test_join_cone_suspension():
    square = join_complex(TWO_POINTS, TWO_POINTS)
    assert square.ground == 4
    assert square.facets == (0b0101, 0b1001, 0b0110, 0b1010)
    assert cone(TWO_POINTS).facets == (0b101, 0b110)
    assert suspension(TWO_POINTS) == square


def test_add_cone_glues_on_a_subcomplex():
    glued = add_cone(TWO_POINTS, TWO_POINTS)
    assert glued.facets == (0b101, 0b110)
    with pytest.raises(InputError):
        add_cone(TWO_POINTS, simplex(2, 0b11))


def test_relabel():
    assert relabel(TWO_POINTS, 5).ground == 5
    with pytest.raises(InputError):
        relabel(TWO_POINTS, 1)


def test_minimal_nonfaces():
    assert minimal_nonfaces(sphere_boundary(2)) == [0b111]
    assert minimal_nonfaces(TWO_POINTS) == [0b11]
    assert minimal_nonfaces(empty_complex(2)) == [0b01, 0b10]
    assert minimal_nonfaces(void_complex(2)) == [0]


def test_alexander_dual_edge_cases():
    assert alexander_dual(empty_complex(3)) == sphere_boundary(2)
    assert alexander_dual(simplex(3, 0b111)).is_void
    assert alexander_dual(void_complex(3)) == simplex(3, 0b111)
    assert alexander_dual(TWO_POINTS).is_empty


def test_alexander_dual_is_an_involution():
    k = SimplicialComplex(5, (bits_of([0, 1, 2]), bits_of([2, 3]), bits_of([3, 4]), bits_of([1, 4])))
    assert alexander_dual(alexander_dual(k)) == k


def test_alexander_dual_respects_ground_budget():
    settings.override_budget(max_dual_ground=3)
    with pytest.raises(CapacityError):
        alexander_dual(empty_complex(4))


def test_json_dict_shape():
    k = SimplicialComplex(4, (bits_of([0, 1]), bits_of([1, 2, 3])))
    data = k.to_json_dict()
    assert data == {"ground": 4, "facets": [[0, 1], [1, 2, 3]]}
    assert SimplicialComplex.from_json_dict(data) == k
    with pytest.raises(InputError):
        SimplicialComplex.from_json_dict({"facets": [[0]]})
