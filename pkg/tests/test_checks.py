import pytest

from instances import regular_systems
from qhgb.checks import (
    EmptyDegree,
    check_depth,
    divisible_degrees,
    extended_system,
    gen_generic,
    is_noether_position,
    is_regular,
    monomial_witness,
)
from qhgb.f5 import matrix_f5
from qhgb.monomials import WeightSystem, monomials_up_to_wdeg
from qhgb.polynomial import PolySystem, Ring

R23 = Ring(65521, (2, 3))
x, y = R23.gens()
R11 = Ring(65521, (1, 1))
a, b = R11.gens()


def test_running_example_regular():
    F = PolySystem(R23, [x * y, x**3 + y**2])
    rep = is_regular(F)
    assert rep and rep.witness is None and rep.reductions_to_zero == 0
    assert matrix_f5(F).reductions_to_zero == 0


def test_trivial_syzygy_witness():
    f = x**3 + y**2
    rep = is_regular(PolySystem(R23, [f, x * f]))
    assert not rep and rep.witness == 8
    rep = is_regular(PolySystem(R11, [a**2 + b**2, a**3 + a * b**2]))
    assert not rep and rep.witness == 3


def test_monomial_witness():
    for ws, ds in [((2, 3), (6, 6)), ((1, 2, 3), (4, 4, 6)), ((3, 1), (3, 5))]:
        W = WeightSystem(ws)
        assert divisible_degrees(W, ds)
        assert is_regular(monomial_witness(W, ds))
    with pytest.raises(ValueError):
        monomial_witness(WeightSystem((2, 3)), (5, 6))


def test_more_polynomials_than_variables():
    assert not is_regular(PolySystem(R11, [a, b, a + b]))


def test_noether_examples():
    assert not is_noether_position(PolySystem(R11, [a * b]))
    assert is_noether_position(PolySystem(R11, [a**2 + a * b]))
    F = gen_generic(3, WeightSystem((3, 2, 1)), (6, 6, 6), seed=2)
    assert extended_system(F) == F
    assert is_noether_position(F)


def test_positive_dimension_depth():
    F = gen_generic(3, WeightSystem((1, 1, 2)), (2, 4), seed=0)
    assert check_depth(F) >= 2 + 4 + 2
    assert is_regular(F) and is_noether_position(F)


def test_generator_is_reproducible():
    W = WeightSystem((1, 2, 3))
    F1 = gen_generic(3, W, (6, 6, 6), seed=42)
    F2 = gen_generic(3, W, (6, 6, 6), seed=42)
    assert F1 == F2
    assert F1 != gen_generic(3, W, (6, 6, 6), seed=43)
    assert all(1 <= c < 65521 for f in F1.polys for c in f.terms.values())


def test_generator_shapes():
    W = WeightSystem((2, 3))
    F = gen_generic(2, W, (6, 6), 1, "whomog_plus_constant")
    assert not F.quasi_homogeneous
    assert all((0, 0) in f.terms and len(f.terms) == 3 for f in F.polys)
    A = gen_generic(2, W, (6, 5), 1, "affine_up_to_degree")
    for f, d in zip(A.polys, (6, 5)):
        assert set(f.terms) == set(monomials_up_to_wdeg(d, W))
    with pytest.raises(ValueError):
        gen_generic(2, W, (6, 6), 1, "nonsense")
    with pytest.raises(ValueError):
        gen_generic(3, W, (6, 6), 1)


def test_empty_degree():
    with pytest.raises(EmptyDegree):
        gen_generic(2, WeightSystem((2, 3)), (1, 6), 0)


def test_configuration_without_regular_sequence():
    W = WeightSystem((1, 2))
    for seed in range(5):
        assert not is_regular(gen_generic(2, W, (1, 1), seed))


def test_generic_systems_are_regular_and_in_noether_position():
    for ws, ds in [((3, 2, 1), (6, 6, 6)), ((2, 3), (6, 6))]:
        W = WeightSystem(ws)
        for seed in range(20):
            F = gen_generic(len(ws), W, ds, seed)
            assert is_regular(F) and is_noether_position(F), (ws, seed)


def test_two_regularity_tests_agree():
    f = x**3 + y**2
    cases = list(regular_systems()) + [
        PolySystem(R23, [f, x * f]),
        PolySystem(R11, [a * b, b]),
        gen_generic(2, WeightSystem((1, 2)), (1, 1), 0),
    ]
    for F in cases:
        rep = is_regular(F)
        run = matrix_f5(F, check_depth(F))
        assert rep.regular == (run.reductions_to_zero == 0)
