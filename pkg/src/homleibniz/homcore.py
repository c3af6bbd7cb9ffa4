"""Hom-Leibniz algebras, their bimodules and the semidirect product.

Conventions used throughout the package:

* a linear map is a ``(target_dim, source_dim)`` matrix acting on column
  vectors, so ``alpha(e_j) = sum_i alpha[i, j] e_i``;
* a product is a structure-constant tensor ``c[i, j, k]`` with
  ``e_i e_j = sum_k c[i, j, k] e_k``;
* a left action is ``l[i, a, b]`` (``x_i . m_a``), a right action ``r[a, i, b]``
  (``m_a . x_i``);
* direct sums are ordered algebra part first, module part second.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _multilinear as ml
from .qlinalg import as_qarray, identity, zeros
from .reports import CheckReport, residual_check

LEFT = "left"
RIGHT = "right"


class ConstructionError(ValueError):
    """A constructor refused its input; ``report`` says which axiom failed."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message if report is None else f"{message}\n{report.summary()}")
        self.message = message
        self.report = report


def default_labels(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


def _arrays_equal(a, b) -> bool:
    a, b = np.asarray(a, dtype=object), np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


@dataclass(frozen=True, eq=False)
class HomVectorSpace:
    """A vector space with a distinguished endomorphism (its twist)."""

    twist: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        twist = as_qarray(self.twist)
        if twist.ndim != 2 or twist.shape[0] != twist.shape[1]:
            raise ValueError(f"twist must be square, got shape {twist.shape}")
        object.__setattr__(self, "twist", twist)
        if not self.labels:
            object.__setattr__(self, "labels", default_labels("v", twist.shape[0]))
        elif len(self.labels) != twist.shape[0]:
            raise ValueError("one label per basis vector is required")

    @property
    def dim(self) -> int:
        return self.twist.shape[0]

    @classmethod
    def identity(cls, dim: int, prefix: str = "v") -> "HomVectorSpace":
        return cls(identity(dim), default_labels(prefix, dim))

    def alpha(self, u):
        return ml.apply(self.twist, u)

    def __eq__(self, other):
        if not isinstance(other, HomVectorSpace):
            return NotImplemented
        return _arrays_equal(self.twist, other.twist)

    def direct_sum(self, other: "HomVectorSpace") -> "HomVectorSpace":
        n, m = self.dim, other.dim
        twist = zeros(n + m, n + m)
        twist[:n, :n] = self.twist
        twist[n:, n:] = other.twist
        return HomVectorSpace(twist, self.labels + other.labels)


@dataclass(frozen=True, eq=False)
class HomAlgebra:
    """Structure constants ``product[i, j, k]`` plus twist ``alpha`` on ``space``."""

    space: HomVectorSpace
    product: np.ndarray
    handedness: str = LEFT

    def __post_init__(self):
        n = self.space.dim
        product = as_qarray(self.product)
        if product.shape != (n, n, n):
            raise ValueError(f"product tensor must have shape {(n, n, n)}, got {product.shape}")
        if self.handedness not in (LEFT, RIGHT):
            raise ValueError(f"handedness must be 'left' or 'right', got {self.handedness!r}")
        object.__setattr__(self, "product", product)

    @classmethod
    def build(cls, product, twist=None, handedness=LEFT, labels=()) -> "HomAlgebra":
        product = as_qarray(product)
        n = product.shape[0]
        twist = identity(n) if twist is None else twist
        return cls(HomVectorSpace(twist, tuple(labels) or default_labels("e", n)), product, handedness)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def twist(self) -> np.ndarray:
        return self.space.twist

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def mul(self, u, v):
        return ml.bilinear(self.product, u, v)

    def alpha(self, u):
        return ml.apply(self.space.twist, u)

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return (
            self.handedness == other.handedness
            and self.space == other.space
            and _arrays_equal(self.product, other.product)
        )

    def __repr__(self):
        return f"HomAlgebra(dim={self.dim}, handedness={self.handedness!r})"


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Left action ``left[i, a, b]`` and right action ``right[a, i, b]`` on ``space``."""

    space: HomVectorSpace
    left: np.ndarray
    right: np.ndarray
    algebra_dim: int = field(default=-1)

    def __post_init__(self):
        m = self.space.dim
        left, right = as_qarray(self.left), as_qarray(self.right)
        n = left.shape[0] if self.algebra_dim < 0 else self.algebra_dim
        if left.shape != (n, m, m):
            raise ValueError(f"left action must have shape {(n, m, m)}, got {left.shape}")
        if right.shape != (m, n, m):
            raise ValueError(f"right action must have shape {(m, n, m)}, got {right.shape}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "algebra_dim", n)

    @classmethod
    def build(cls, left, right, twist=None, labels=()) -> "Bimodule":
        left = as_qarray(left)
        m = left.shape[1]
        twist = identity(m) if twist is None else twist
        return cls(HomVectorSpace(twist, tuple(labels) or default_labels("m", m)), left, right, left.shape[0])

    @classmethod
    def trivial(cls, algebra: HomAlgebra, space: HomVectorSpace) -> "Bimodule":
        n, m = algebra.dim, space.dim
        return cls(space, zeros(n, m, m), zeros(m, n, m), n)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def twist(self) -> np.ndarray:
        return self.space.twist

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def act_left(self, x, m):
        return ml.bilinear(self.left, x, m)

    def act_right(self, m, x):
        return ml.bilinear(self.right, m, x)

    def alpha(self, m):
        return ml.apply(self.space.twist, m)

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (
            self.space == other.space
            and _arrays_equal(self.left, other.left)
            and _arrays_equal(self.right, other.right)
        )


def adjoint_bimodule(a: HomAlgebra) -> Bimodule:
    """``g`` as a bimodule over itself, both actions given by the product."""
    return Bimodule(a.space, a.product, a.product, a.dim)


# ---------------------------------------------------------------- residuals
#
# Each *_residuals function returns a list of (name, residual, labels) with
# residual shaped (d1, ..., dk, target_dim); zero residual <=> identity holds.


def leibniz_residual(a: HomAlgebra, handedness: str | None = None):
    hand = handedness or a.handedness
    x, y, z = ml.grid(a.dim, a.dim, a.dim)
    mul, al = a.mul, a.alpha
    if hand == LEFT:
        res = mul(al(x), mul(y, z)) - mul(mul(x, y), al(z)) - mul(al(y), mul(x, z))
        name = "left-leibniz"
    else:
        res = mul(mul(x, y), al(z)) - mul(mul(x, z), al(y)) - mul(al(x), mul(y, z))
        name = "right-leibniz"
    return name, res, (a.labels,) * 3


def multiplicativity_residual(a: HomAlgebra):
    x, y = ml.grid(a.dim, a.dim)
    res = a.alpha(a.mul(x, y)) - a.mul(a.alpha(x), a.alpha(y))
    return "multiplicativity", res, (a.labels,) * 2


def bimodule_residuals(a: HomAlgebra, b: Bimodule, handedness: str | None = None):
    hand = handedness or a.handedness
    if b.algebra_dim != a.dim:
        raise ValueError("bimodule and algebra dimensions disagree")
    n, m = a.dim, b.dim
    al, am = a.alpha, b.alpha
    mul, lt, rt = a.mul, b.act_left, b.act_right
    gl, ml_ = a.labels, b.labels
    out = []

    x, mm = ml.grid(n, m)
    out.append(("twist-left", am(lt(x, mm)) - lt(al(x), am(mm)), (gl, ml_)))
    mm, x = ml.grid(m, n)
    out.append(("twist-right", am(rt(mm, x)) - rt(am(mm), al(x)), (ml_, gl)))

    if hand == LEFT:
        x, y, mm = ml.grid(n, n, m)
        out.append(("L1", lt(al(x), lt(y, mm)) - lt(mul(x, y), am(mm)) - lt(al(y), lt(x, mm)), (gl, gl, ml_)))
        mm, x, y = ml.grid(m, n, n)
        out.append(("L2", rt(am(mm), mul(x, y)) - rt(rt(mm, x), al(y)) - lt(al(x), rt(mm, y)), (ml_, gl, gl)))
        x, mm, y = ml.grid(n, m, n)
        out.append(("L3", lt(al(x), rt(mm, y)) - rt(lt(x, mm), al(y)) - rt(am(mm), mul(x, y)), (gl, ml_, gl)))
    else:
        mm, x, y = ml.grid(m, n, n)
        out.append(("R1", rt(rt(mm, x), al(y)) - rt(am(mm), mul(x, y)) - rt(rt(mm, y), al(x)), (ml_, gl, gl)))
        x, mm, y = ml.grid(n, m, n)
        out.append(("R2", rt(lt(x, mm), al(y)) - lt(al(x), rt(mm, y)) - lt(mul(x, y), am(mm)), (gl, ml_, gl)))
        x, y, mm = ml.grid(n, n, m)
        out.append(("R3", lt(mul(x, y), am(mm)) - lt(al(x), lt(y, mm)) - rt(lt(x, mm), al(y)), (gl, gl, ml_)))
    return out


# ----------------------------------------------------------------- checkers


def check_left_hom_leibniz(a: HomAlgebra) -> CheckReport:
    if a.handedness != LEFT:
        raise ValueError("check_left_hom_leibniz needs a left algebra")
    return CheckReport("left Hom-Leibniz identity", [residual_check(*leibniz_residual(a, LEFT))])


def check_right_hom_leibniz(a: HomAlgebra) -> CheckReport:
    if a.handedness != RIGHT:
        raise ValueError("check_right_hom_leibniz needs a right algebra")
    return CheckReport("right Hom-Leibniz identity", [residual_check(*leibniz_residual(a, RIGHT))])


def check_hom_leibniz(a: HomAlgebra, handedness: str | None = None) -> CheckReport:
    """Check the Hom-Leibniz identity of the given (default: own) handedness."""
    hand = handedness or a.handedness
    return CheckReport(f"{hand} Hom-Leibniz identity", [residual_check(*leibniz_residual(a, hand))])


def check_multiplicativity(a: HomAlgebra) -> CheckReport:
    return CheckReport("multiplicativity of the twist", [residual_check(*multiplicativity_residual(a))])


def check_bimodule(a: HomAlgebra, b: Bimodule, handedness: str | None = None) -> CheckReport:
    """Twist compatibility of both actions plus L1-L3 (left) or R1-R3 (right)."""
    return CheckReport(
        "bimodule axioms",
        [residual_check(*item) for item in bimodule_residuals(a, b, handedness)],
    )


# ------------------------------------------------------------- constructions


def semidirect_product(a: HomAlgebra, b: Bimodule, validate: bool = True) -> HomAlgebra:
    """The algebra on ``g + M`` with ``(x, m)(y, n) = (xy, x.n + m.y)``."""
    if validate:
        report = check_bimodule(a, b)
        if not report.passed:
            raise ConstructionError("semidirect product needs a valid bimodule", report)
    n, m = a.dim, b.dim
    prod = zeros(n + m, n + m, n + m)
    prod[:n, :n, :n] = a.product
    prod[:n, n:, n:] = b.left
    prod[n:, :n, n:] = b.right
    return HomAlgebra(a.space.direct_sum(b.space), prod, a.handedness)


def opposite(a: HomAlgebra) -> HomAlgebra:
    """Swap the product's arguments and flip handedness."""
    flipped = RIGHT if a.handedness == LEFT else LEFT
    return HomAlgebra(a.space, np.ascontiguousarray(a.product.transpose(1, 0, 2)), flipped)


def yau_twist(a: HomAlgebra, endo) -> HomAlgebra:
    """Twist an untwisted algebra along an endomorphism: product ``endo o mul``, twist ``endo``."""
    endo = as_qarray(endo)
    if not _arrays_equal(a.twist, identity(a.dim)):
        raise ValueError("yau_twist expects an algebra whose twist is the identity")
    if endo.shape != (a.dim, a.dim):
        raise ValueError(f"endomorphism must be {a.dim}x{a.dim}")
    x, y = ml.grid(a.dim, a.dim)
    res = ml.apply(endo, a.mul(x, y)) - a.mul(ml.apply(endo, x), ml.apply(endo, y))
    check = residual_check("endomorphism", res, (a.labels,) * 2)
    if not check.passed:
        raise ValueError(f"not an algebra endomorphism: fails at {check.witness}")
    product = np.einsum("ijs,ts->ijt", a.product, endo)
    return HomAlgebra(HomVectorSpace(endo, a.labels), product, a.handedness)
