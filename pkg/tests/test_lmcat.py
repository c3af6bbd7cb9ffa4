import pytest
from hypothesis import given
from hypothesis import strategies as st

from homleibniz import zoo
from homleibniz.homcore import ConstructionError, HomAlgebra, HomVectorSpace
from homleibniz.lmcat import (
    LMMorphism,
    LMObject,
    LMRepresentation,
    adjoint_representation,
    check_lm_morphism,
    check_lm_object,
    check_lm_representation,
    check_symmetric_lm_object,
    check_via_semidirect_hom,
    is_equivariant,
    lm_semidirect,
    tensor_square_lm,
)
from homleibniz.qlinalg import identity, zeros
from oracles import Struct, lm_object_ok

VALID = [n for n in zoo.names() if zoo.expected_valid(n)]


@pytest.mark.parametrize("name", zoo.names())
def test_zoo_validity_matches_loop_oracle(name):
    o = zoo.instance(name)
    assert check_lm_object(o).passed == zoo.expected_valid(name) == lm_object_ok(Struct(o))


@pytest.mark.parametrize("seed", range(10))
def test_random_yau_instances_are_valid(seed):
    o = zoo.random_yau_instance(seed)
    assert check_lm_object(o).passed and lm_object_ok(Struct(o))


@pytest.mark.parametrize("o", [zoo.instance(n) for n in zoo.names()] + zoo.broken_anchors())
def test_semidirect_characterization_agrees(o):
    assert is_equivariant(check_lm_object(o)) == check_via_semidirect_hom(o).passed


def test_broken_anchors_fail_both_ways():
    for o in zoo.broken_anchors():
        assert not is_equivariant(check_lm_object(o))
        assert not check_via_semidirect_hom(o).passed


def test_broken_anchor_witness():
    report = check_lm_object(zoo.broken_anchors()[0])
    assert report.failures()[0].name == "cm02-left"
    assert report["cm02-left"].witness == ("e1", "e1")


@pytest.mark.parametrize("name", VALID)
def test_adjoint_representation_and_semidirect(name):
    o = zoo.instance(name)
    r = adjoint_representation(o)
    assert check_lm_representation(o, r).passed
    s = lm_semidirect(o, r)
    assert (s.n, s.m) == (2 * o.n, 2 * o.m)
    assert check_lm_object(s).passed


@pytest.mark.parametrize("name", VALID)
def test_trivial_representation_semidirect(name):
    o = zoo.instance(name)
    r = LMRepresentation.trivial(o, HomVectorSpace.identity(1, "v"), HomVectorSpace.identity(2, "w"))
    assert check_lm_representation(o, r).passed
    assert check_lm_object(lm_semidirect(o, r)).passed


def test_semidirect_refuses_invalid_object():
    o = zoo.broken_anchors()[0]
    with pytest.raises(ConstructionError):
        lm_semidirect(o, adjoint_representation(o, validate=False))


def test_adjoint_representation_refuses_invalid_object():
    with pytest.raises(ConstructionError):
        adjoint_representation(zoo.broken_anchors()[1])


def test_tensor_square_input_validation_and_output_failure():
    # the anchor conditions hold, the module axiom L2 does not
    o = tensor_square_lm(zoo.l2())
    report = check_lm_object(o)
    assert report.all_passed("cm01", "cm02-left", "cm02-right", "algebra.")
    assert not report["bimodule.L2"].passed
    assert report["bimodule.L2"].witness == ("e1⊗e1", "e1", "e1")
    # e1 e1 = e1 with twist diag(1, 2) is not left Leibniz
    with pytest.raises(ConstructionError):
        tensor_square_lm(HomAlgebra.build([[[1, 0], [0, 0]], [[0, 0], [0, 0]]], [[1, 0], [0, 2]]))


def test_tensor_square_of_zero_product_is_valid():
    o = tensor_square_lm(zoo.instance("zero21").algebra)
    assert check_lm_object(o).passed


def test_identity_morphism_and_twist_scaling():
    o = zoo.instance("l2-adjoint")
    assert check_lm_morphism(o, o, LMMorphism.identity(o)).passed
    # e1 -> c e1, e2 -> c^2 e2 is an automorphism of L2
    phi = [[3, 0], [0, 9]]
    assert check_lm_morphism(o, o, LMMorphism(phi, phi)).passed
    bad = check_lm_morphism(o, o, LMMorphism(phi, [[3, 0], [0, 3]]))
    assert not bad.passed and not bad["anchor"].passed


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_l2_endomorphisms_are_morphisms(a, b):
    o = zoo.instance("l2-adjoint")
    phi = [[a, 0], [b, a * a]]
    assert check_lm_morphism(o, o, LMMorphism(phi, phi)).passed


def test_symmetric_objects():
    assert check_symmetric_lm_object(zoo.instance("l2-adjoint")).passed
    assert check_symmetric_lm_object(zoo.instance("r2-adjoint")).passed


def test_shape_validation():
    o = zoo.instance("l2-adjoint")
    with pytest.raises(ValueError):
        LMObject(o.algebra, o.module, zeros(2, 3))
    with pytest.raises(ValueError):
        check_lm_morphism(o, o, LMMorphism(identity(3), identity(2)))
