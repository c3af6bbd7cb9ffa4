import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from homleibniz import zoo
from homleibniz.homcore import (
    LEFT,
    RIGHT,
    Bimodule,
    ConstructionError,
    HomAlgebra,
    HomVectorSpace,
    adjoint_bimodule,
    check_bimodule,
    check_hom_leibniz,
    check_left_hom_leibniz,
    check_multiplicativity,
    check_right_hom_leibniz,
    opposite,
    semidirect_product,
    yau_twist,
)
from homleibniz.qlinalg import zeros
from oracles import left_leibniz_ok

ints = st.integers(-2, 2)


@st.composite
def algebras(draw, n=2):
    prod = [[[draw(ints) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    twist = [[draw(ints) for _ in range(n)] for _ in range(n)]
    return HomAlgebra.build(prod, twist)


@pytest.mark.parametrize("factory", [zoo.l2, zoo.r2, zoo.n3, zoo.l2_yau])
def test_named_algebras_are_left_hom_leibniz(factory):
    a = factory()
    assert check_left_hom_leibniz(a).passed
    assert check_multiplicativity(a).passed


def test_left_but_not_right_leibniz_with_witness():
    p = zeros(2, 2, 2)
    p[0, 1, 1] = 1  # e1 e2 = e2
    a = HomAlgebra.build(p)
    assert check_hom_leibniz(a, LEFT).passed
    report = check_hom_leibniz(a, RIGHT)
    assert not report.passed
    bad = report.failures()[0]
    assert bad.witness is not None and any(d != 0 for d in bad.defect)


@given(algebras())
def test_leibniz_check_agrees_with_loop_oracle(a):
    assert check_left_hom_leibniz(a).passed == left_leibniz_ok(a.product.tolist(), a.twist.tolist())


def test_wrong_handedness_is_a_usage_error():
    with pytest.raises(ValueError):
        check_right_hom_leibniz(zoo.l2())


def test_opposite_flips_handedness():
    b = opposite(zoo.l2())
    assert b.handedness == RIGHT
    assert check_right_hom_leibniz(b).passed
    assert opposite(b) == zoo.l2()


@given(ints.filter(lambda k: k != 0), ints)
def test_yau_twist_of_l2_along_endomorphisms(a, b):
    t = yau_twist(zoo.l2(), [[a, 0], [b, a * a]])
    assert check_left_hom_leibniz(t).passed and check_multiplicativity(t).passed


def test_yau_twist_refuses_non_endomorphism():
    with pytest.raises(ValueError):
        yau_twist(zoo.l2(), [[2, 0], [0, 3]])


@pytest.mark.parametrize("factory", [zoo.l2, zoo.r2, zoo.n3, zoo.l2_yau])
def test_adjoint_bimodule_and_semidirect_product(factory):
    a = factory()
    b = adjoint_bimodule(a)
    assert check_bimodule(a, b).passed
    s = semidirect_product(a, b)
    assert s.dim == 2 * a.dim
    assert check_left_hom_leibniz(s).passed


def test_semidirect_product_refuses_bad_module():
    a = zoo.l2()
    left = zeros(2, 1, 1)
    left[1, 0, 0] = 1  # e2 = e1 e1 acts as the identity while e1 acts as zero: L1 fails
    b = Bimodule.build(left, zeros(1, 2, 1))
    assert not check_bimodule(a, b).passed
    with pytest.raises(ConstructionError):
        semidirect_product(a, b)


def test_trivial_bimodule_passes():
    a = zoo.n3()
    assert check_bimodule(a, Bimodule.trivial(a, HomVectorSpace.identity(2, "m"))).passed


def test_shapes_are_validated():
    with pytest.raises(ValueError):
        HomAlgebra.build(np.zeros((2, 2, 3), dtype=object))
    with pytest.raises(ValueError):
        HomAlgebra.build(zeros(2, 2, 2), handedness="up")
    assert HomAlgebra.build(zeros(1, 1, 1)).handedness == LEFT
