"""Named small instances and seeded random families used by tests, demos and the CLI."""

from __future__ import annotations

import random
from typing import Callable

import numpy as np

from .deform import NijenhuisPair
from .homcore import Bimodule, ConstructionError, HomAlgebra, HomVectorSpace, yau_twist
from .lmcat import (
    LMMorphism,
    LMObject,
    adjoint_object,
    check_lm_morphism,
    check_lm_object,
    tensor_square_lm,
    zero_object,
)
from .qlinalg import as_qarray, identity, zeros


def l2() -> HomAlgebra:
    """Two-dimensional left Leibniz algebra with ``e1 e1 = e2`` (not Lie)."""
    p = zeros(2, 2, 2)
    p[0, 0, 1] = 1
    return HomAlgebra.build(p)


def r2() -> HomAlgebra:
    """Non-abelian two-dimensional Lie algebra ``[e1, e2] = e2``."""
    p = zeros(2, 2, 2)
    p[0, 1, 1] = 1
    p[1, 0, 1] = -1
    return HomAlgebra.build(p)


def n3() -> HomAlgebra:
    """Three-dimensional nilpotent Leibniz algebra: ``e1 e2 = e3 = -e2 e1``, ``e1 e1 = e3``."""
    p = zeros(3, 3, 3)
    p[0, 1, 2] = 1
    p[1, 0, 2] = -1
    p[0, 0, 2] = 1
    return HomAlgebra.build(p)


def l2_yau() -> HomAlgebra:
    return yau_twist(l2(), [[2, 0], [0, 4]])


def l2_ideal() -> LMObject:
    """``M = span(e2)`` inside L2 with ``f`` the inclusion (M is central, so actions vanish)."""
    a = l2()
    module = Bimodule(HomVectorSpace.identity(1, "m"), zeros(2, 1, 1), zeros(1, 2, 1), 2)
    return LMObject(a, module, [[0], [1]])


def yau_twist_object(o: LMObject, phi0, phi1) -> LMObject:
    """Compose every structure map with an endomorphism ``(phi0, phi1)``; it becomes the twist.

    The input must have identity twists and ``(phi0, phi1)`` must be an
    endomorphism of it.
    """
    phi0, phi1 = as_qarray(phi0), as_qarray(phi1)
    if not (np.array_equal(o.algebra.twist, identity(o.n)) and np.array_equal(o.module.space.twist, identity(o.m))):
        raise ValueError("yau_twist_object expects identity twists")
    report = check_lm_morphism(o, o, LMMorphism(phi0, phi1))
    if not report.passed:
        raise ConstructionError("not an endomorphism of the object", report)
    a, b = o.algebra, o.module
    algebra = HomAlgebra(
        HomVectorSpace(phi0, a.labels), np.einsum("ijs,ts->ijt", a.product, phi0), a.handedness
    )
    module = Bimodule(
        HomVectorSpace(phi1, b.labels),
        np.einsum("ijs,ts->ijt", b.left, phi1),
        np.einsum("ijs,ts->ijt", b.right, phi1),
        o.n,
    )
    return LMObject(algebra, module, o.anchor)


# name -> (factory, passes check_lm_object)
_NAMED: dict[str, tuple[Callable[[], LMObject], bool]] = {
    "zero11": (lambda: zero_object(1, 1), True),
    "zero21": (lambda: zero_object(2, 1), True),
    "l2-adjoint": (lambda: adjoint_object(l2()), True),
    "l2-yau-adjoint": (lambda: adjoint_object(l2_yau()), True),
    "l2-ideal": (l2_ideal, True),
    "r2-adjoint": (lambda: adjoint_object(r2()), True),
    "n3-yau-adjoint": (lambda: adjoint_object(yau_twist(n3(), [[2, 0, 0], [0, 2, 0], [0, 0, 4]])), True),
    "l2-tensor-square": (lambda: tensor_square_lm(l2()), False),
}


def names() -> list[str]:
    return list(_NAMED)


def instance(name: str) -> LMObject:
    try:
        factory, _ = _NAMED[name]
    except KeyError:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(_NAMED)}") from None
    return factory()


def expected_valid(name: str) -> bool:
    return _NAMED[name][1]


def broken_anchors() -> list[LMObject]:
    """Valid structures paired with anchors that violate equivariance."""
    a = l2()
    adj = adjoint_object(a)
    first = LMObject(a, adj.module, [[1, 0], [0, 0]])
    b = r2()
    second = LMObject(b, adjoint_object(b).module, [[0, 1], [0, 0]])
    return [first, second]


def _rand_nonzero(rng: random.Random, lo: int = -3, hi: int = 3) -> int:
    return rng.choice([k for k in range(lo, hi + 1) if k != 0])


def random_yau_instance(seed: int) -> LMObject:
    """A Yau twist of a small untwisted object along a random endomorphism."""
    rng = random.Random(seed)
    kind = rng.choice(["l2", "r2", "n3", "l2-ideal"])
    a, b = _rand_nonzero(rng), rng.randint(-3, 3)
    if kind == "l2":
        phi = [[a, 0], [b, a * a]]
        return yau_twist_object(adjoint_object(l2()), phi, phi)
    if kind == "r2":
        phi = [[1, 0], [b, a]]
        return yau_twist_object(adjoint_object(r2()), phi, phi)
    if kind == "n3":
        q = rng.randint(-3, 3)
        phi = [[a, 0, 0], [0, a, 0], [b, q, a * a]]
        return yau_twist_object(adjoint_object(n3()), phi, phi)
    return yau_twist_object(l2_ideal(), [[a, 0], [b, a * a]], [[a * a]])


def random_nijenhuis_pair(seed: int) -> NijenhuisPair:
    """A Nijenhuis pair on the L2 adjoint object from one of its three families.

    The families (found by exhaustive search over small entries) are
    ``N0 = N1 = [[c, 0], [b, c]]``; ``N0 = [[0, 0], [b, 0]]``,
    ``N1 = [[0, 0], [b', 0]]``; and ``N0 = 0``, ``N1 = [[c, 0], [b, d]]`` with
    ``d`` in ``{0, c}``.
    """
    rng = random.Random(seed)
    family = rng.randrange(3)
    c, b, b2 = (rng.randint(-5, 5) for _ in range(3))
    if family == 0:
        n = [[c, 0], [b, c]]
        return NijenhuisPair(n, n)
    if family == 1:
        return NijenhuisPair([[0, 0], [b, 0]], [[0, 0], [b2, 0]])
    return NijenhuisPair(zeros(2, 2), [[c, 0], [b, rng.choice([0, c])]])


def validate_zoo() -> dict[str, bool]:
    return {name: check_lm_object(instance(name)).passed for name in _NAMED}


__all__ = [
    "broken_anchors",
    "expected_valid",
    "instance",
    "l2",
    "l2_ideal",
    "l2_yau",
    "n3",
    "names",
    "r2",
    "random_nijenhuis_pair",
    "random_yau_instance",
    "validate_zoo",
    "yau_twist_object",
]
