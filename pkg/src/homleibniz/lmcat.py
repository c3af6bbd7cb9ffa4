"""Hom-Leibniz algebras in the Loday-Pirashvili category of linear maps.

An :class:`LMObject` is an anchor ``f: M -> g`` from a bimodule to its
algebra that commutes with the twists and intertwines the actions.  A
:class:`LMRepresentation` ``(V, W, phi)`` carries four g-actions plus the
cross actions ``w |> m`` (W x M -> V) and ``m <| w`` (M x W -> V).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _multilinear as ml
from .homcore import (
    LEFT,
    RIGHT,
    Bimodule,
    ConstructionError,
    HomAlgebra,
    HomVectorSpace,
    _arrays_equal,
    adjoint_bimodule,
    bimodule_residuals,
    leibniz_residual,
    multiplicativity_residual,
    semidirect_product,
)
from .qlinalg import as_qarray, identity, zeros
from .reports import CheckReport, residual_check


@dataclass(frozen=True, eq=False)
class LMObject:
    algebra: HomAlgebra
    module: Bimodule
    anchor: np.ndarray

    def __post_init__(self):
        anchor = as_qarray(self.anchor)
        shape = (self.algebra.dim, self.module.dim)
        if anchor.shape != shape:
            raise ValueError(f"anchor must have shape {shape}, got {anchor.shape}")
        if self.module.algebra_dim != self.algebra.dim:
            raise ValueError("module is over an algebra of a different dimension")
        object.__setattr__(self, "anchor", anchor)

    @property
    def n(self) -> int:
        return self.algebra.dim

    @property
    def m(self) -> int:
        return self.module.dim

    def f(self, u):
        return ml.apply(self.anchor, u)

    def __eq__(self, other):
        if not isinstance(other, LMObject):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.module == other.module
            and _arrays_equal(self.anchor, other.anchor)
        )

    def __repr__(self):
        return f"LMObject(dim g={self.n}, dim M={self.m})"


@dataclass(frozen=True, eq=False)
class LMMorphism:
    """A pair ``(phi0: g -> g', phi1: M -> M')`` of matrices."""

    phi0: np.ndarray
    phi1: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "phi0", as_qarray(self.phi0))
        object.__setattr__(self, "phi1", as_qarray(self.phi1))

    @classmethod
    def identity(cls, o: LMObject) -> "LMMorphism":
        return cls(identity(o.n), identity(o.m))


@dataclass(frozen=True, eq=False)
class LMRepresentation:
    """Coefficients ``(V, W, phi)`` for the cohomology of an LM object.

    Tensor shapes, with ``n = dim g`` and ``m = dim M``: ``v_left (n, v, v)``,
    ``v_right (v, n, v)``, ``w_left (n, w, w)``, ``w_right (w, n, w)``,
    ``cross_r (w, m, v)`` for ``w |> m`` and ``cross_l (m, w, v)`` for
    ``m <| w``; ``phi`` is a ``(w, v)`` matrix.
    """

    v_space: HomVectorSpace
    w_space: HomVectorSpace
    phi: np.ndarray
    v_left: np.ndarray
    v_right: np.ndarray
    w_left: np.ndarray
    w_right: np.ndarray
    cross_r: np.ndarray
    cross_l: np.ndarray

    def __post_init__(self):
        for name in ("phi", "v_left", "v_right", "w_left", "w_right", "cross_r", "cross_l"):
            object.__setattr__(self, name, as_qarray(getattr(self, name)))
        v, w = self.v_space.dim, self.w_space.dim
        if self.phi.shape != (w, v):
            raise ValueError(f"phi must have shape {(w, v)}, got {self.phi.shape}")
        n = self.v_left.shape[0]
        m = self.cross_r.shape[1]
        expected = {
            "v_left": (n, v, v),
            "v_right": (v, n, v),
            "w_left": (n, w, w),
            "w_right": (w, n, w),
            "cross_r": (w, m, v),
            "cross_l": (m, w, v),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {getattr(self, name).shape}")

    @property
    def v(self) -> int:
        return self.v_space.dim

    @property
    def w(self) -> int:
        return self.w_space.dim

    def v_module(self) -> Bimodule:
        return Bimodule(self.v_space, self.v_left, self.v_right, self.v_left.shape[0])

    def w_module(self) -> Bimodule:
        return Bimodule(self.w_space, self.w_left, self.w_right, self.w_left.shape[0])

    @classmethod
    def trivial(cls, o: LMObject, v_space: HomVectorSpace | None = None, w_space=None):
        """All actions zero; default spaces are zero-dimensional."""
        v_space = v_space or HomVectorSpace(zeros(0, 0), ())
        w_space = w_space or HomVectorSpace(zeros(0, 0), ())
        n, m, v, w = o.n, o.m, v_space.dim, w_space.dim
        return cls(
            v_space, w_space, zeros(w, v),
            zeros(n, v, v), zeros(v, n, v), zeros(n, w, w), zeros(w, n, w),
            zeros(w, m, v), zeros(m, w, v),
        )

    def __eq__(self, other):
        if not isinstance(other, LMRepresentation):
            return NotImplemented
        return self.v_space == other.v_space and self.w_space == other.w_space and all(
            _arrays_equal(getattr(self, k), getattr(other, k))
            for k in ("phi", "v_left", "v_right", "w_left", "w_right", "cross_r", "cross_l")
        )


class Ops:
    """Named structure maps of an object and (optionally) a representation.

    Every method takes batches of coordinate vectors, so formulas written
    with it read like the identities they encode.
    """

    def __init__(self, o: LMObject, r: LMRepresentation | None = None):
        self.o, self.r = o, r
        a, b = o.algebra, o.module
        self.mul = a.mul
        self.alpha = a.alpha
        self.alpha_m = b.alpha
        self.lt = b.act_left
        self.rt = b.act_right
        self.f = o.f
        if r is not None:
            self.alpha_v = r.v_space.alpha
            self.alpha_w = r.w_space.alpha

    def phi(self, v):
        return ml.apply(self.r.phi, v)

    def v_lt(self, x, v):
        return ml.bilinear(self.r.v_left, x, v)

    def v_rt(self, v, x):
        return ml.bilinear(self.r.v_right, v, x)

    def w_lt(self, x, w):
        return ml.bilinear(self.r.w_left, x, w)

    def w_rt(self, w, x):
        return ml.bilinear(self.r.w_right, w, x)

    def tr(self, w, m):
        """``w |> m``"""
        return ml.bilinear(self.r.cross_r, w, m)

    def tl(self, m, w):
        """``m <| w``"""
        return ml.bilinear(self.r.cross_l, m, w)


# ------------------------------------------------------------------ objects


def lm_object_residuals(o: LMObject, handedness: str | None = None):
    """All identities of an LM object except multiplicativity, as residuals."""
    hand = handedness or o.algebra.handedness
    a, b = o.algebra, o.module
    name, res, labels = leibniz_residual(a, hand)
    out = [("algebra." + name, res, labels)]
    out += [("bimodule." + nm, res, lab) for nm, res, lab in bimodule_residuals(a, b, hand)]
    out += anchor_residuals(o)
    return out


def anchor_residuals(o: LMObject):
    a, b = o.algebra, o.module
    gl, mlab = a.labels, b.labels
    (mm,) = ml.grid(o.m)
    out = [("cm01", a.alpha(o.f(mm)) - o.f(b.alpha(mm)), (mlab,))]
    x, mm = ml.grid(o.n, o.m)
    out.append(("cm02-left", o.f(b.act_left(x, mm)) - a.mul(x, o.f(mm)), (gl, mlab)))
    mm, x = ml.grid(o.m, o.n)
    out.append(("cm02-right", o.f(b.act_right(mm, x)) - a.mul(o.f(mm), x), (mlab, gl)))
    return out


def check_lm_object(o: LMObject, handedness: str | None = None) -> CheckReport:
    """Algebra identity, bimodule axioms, and both anchor conditions.

    Multiplicativity of the twist is reported as an advisory item only.
    """
    report = CheckReport("LM object", [residual_check(*item) for item in lm_object_residuals(o, handedness)])
    report.add(residual_check(*multiplicativity_residual(o.algebra), advisory=True))
    return report


def is_equivariant(report: CheckReport) -> bool:
    """The anchor part (cm01 and cm02) of a :func:`check_lm_object` report."""
    return report.all_passed("cm01", "cm02")


def check_symmetric_lm_object(o: LMObject) -> CheckReport:
    report = CheckReport("symmetric LM object")
    report.merge(check_lm_object(o, LEFT), "left.")
    report.merge(check_lm_object(o, RIGHT), "right.")
    return report


def check_lm_morphism(src: LMObject, dst: LMObject, mor: LMMorphism) -> CheckReport:
    """Product, both actions, anchor and twist compatibility of ``(phi0, phi1)``.

    The right-action identity is checked alongside the left one; both are
    needed for the morphisms used by trivial deformations and extensions.
    """
    p0, p1 = mor.phi0, mor.phi1
    if p0.shape != (dst.n, src.n) or p1.shape != (dst.m, src.m):
        raise ValueError("morphism shapes do not match the objects")
    P0 = lambda u: ml.apply(p0, u)  # noqa: E731
    P1 = lambda u: ml.apply(p1, u)  # noqa: E731
    sa, da, sb, db = src.algebra, dst.algebra, src.module, dst.module
    gl, mlab = sa.labels, sb.labels
    checks = []
    x, y = ml.grid(src.n, src.n)
    checks.append(residual_check("product", P0(sa.mul(x, y)) - da.mul(P0(x), P0(y)), (gl, gl)))
    x, mm = ml.grid(src.n, src.m)
    checks.append(residual_check("left-action", P1(sb.act_left(x, mm)) - db.act_left(P0(x), P1(mm)), (gl, mlab)))
    mm, x = ml.grid(src.m, src.n)
    checks.append(residual_check("right-action", P1(sb.act_right(mm, x)) - db.act_right(P1(mm), P0(x)), (mlab, gl)))
    (mm,) = ml.grid(src.m)
    checks.append(residual_check("anchor", dst.f(P1(mm)) - P0(src.f(mm)), (mlab,)))
    (x,) = ml.grid(src.n)
    checks.append(residual_check("twist-g", P0(sa.alpha(x)) - da.alpha(P0(x)), (gl,)))
    checks.append(residual_check("twist-M", P1(sb.alpha(mm)) - db.alpha(P1(mm)), (mlab,)))
    return CheckReport("LM morphism", checks)


def check_via_semidirect_hom(o: LMObject) -> CheckReport:
    """Decide equivariance of the anchor through ``(id, f): g x M -> g x g``.

    Both semidirect products are assembled without validation, and the
    block map ``diag(id, f)`` is tested for being a homomorphism of
    Hom-Leibniz algebras (twist and product).
    """
    a = o.algebra
    src = semidirect_product(a, o.module, validate=False)
    dst = semidirect_product(a, adjoint_bimodule(a), validate=False)
    n, m = o.n, o.m
    hom = zeros(2 * n, n + m)
    hom[:n, :n] = identity(n)
    hom[n:, n:] = o.anchor
    H = lambda u: ml.apply(hom, u)  # noqa: E731
    labels = src.labels
    (x,) = ml.grid(n + m)
    twist = residual_check("twist", H(src.alpha(x)) - dst.alpha(H(x)), (labels,))
    x, y = ml.grid(n + m, n + m)
    prod = residual_check("product", H(src.mul(x, y)) - dst.mul(H(x), H(y)), (labels, labels))
    return CheckReport("(id, f) is a homomorphism", [twist, prod])


# ----------------------------------------------------------- representations


def representation_residuals(o: LMObject, r: LMRepresentation):
    """deflm01, deflm02, deflm11-16 and the twist conditions, as residuals.

    Mixed occurrences of a dot in the compatibility identities are resolved
    by type: an M-element against a W-value is ``<|``, a W-value against an
    M-element is ``|>``, and g acting on a V-value uses the V-actions.
    """
    if r.v_left.shape[0] != o.n or r.cross_r.shape[1] != o.m:
        raise ValueError("representation shapes do not match the object")
    op = Ops(o, r)
    n, m, v, w = o.n, o.m, r.v, r.w
    gl, mlab, vl, wl = o.algebra.labels, o.module.labels, r.v_space.labels, r.w_space.labels
    al, am, aw, av = op.alpha, op.alpha_m, op.alpha_w, op.alpha_v
    out = []

    x, vv = ml.grid(n, v)
    out.append(("deflm01-left", op.phi(op.v_lt(x, vv)) - op.w_lt(x, op.phi(vv)), (gl, vl)))
    vv, x = ml.grid(v, n)
    out.append(("deflm01-right", op.phi(op.v_rt(vv, x)) - op.w_rt(op.phi(vv), x), (vl, gl)))
    ww, mm = ml.grid(w, m)
    out.append(("deflm02-r", op.phi(op.tr(ww, mm)) - op.w_rt(ww, op.f(mm)), (wl, mlab)))
    mm, ww = ml.grid(m, w)
    out.append(("deflm02-l", op.phi(op.tl(mm, ww)) - op.w_lt(op.f(mm), ww), (mlab, wl)))

    x, ww, mm = ml.grid(n, w, m)
    out.append((
        "deflm11",
        op.v_lt(al(x), op.tr(ww, mm)) - op.tr(op.w_lt(x, ww), am(mm)) - op.tr(aw(ww), op.lt(x, mm)),
        (gl, wl, mlab),
    ))
    ww, x, mm = ml.grid(w, n, m)
    out.append((
        "deflm12",
        op.tr(aw(ww), op.lt(x, mm)) - op.tr(op.w_rt(ww, x), am(mm)) - op.v_lt(al(x), op.tr(ww, mm)),
        (wl, gl, mlab),
    ))
    mm, ww, x = ml.grid(m, w, n)
    out.append((
        "deflm13",
        op.tl(am(mm), op.w_rt(ww, x)) - op.v_rt(op.tl(mm, ww), al(x)) - op.tr(aw(ww), op.rt(mm, x)),
        (mlab, wl, gl),
    ))
    mm, x, ww = ml.grid(m, n, w)
    out.append((
        "deflm14",
        op.tl(am(mm), op.w_lt(x, ww)) - op.tl(op.rt(mm, x), aw(ww)) - op.v_lt(al(x), op.tl(mm, ww)),
        (mlab, gl, wl),
    ))
    x, mm, ww = ml.grid(n, m, w)
    out.append((
        "deflm15",
        op.v_lt(al(x), op.tl(mm, ww)) - op.tl(op.lt(x, mm), aw(ww)) - op.tl(am(mm), op.w_lt(x, ww)),
        (gl, mlab, wl),
    ))
    ww, mm, x = ml.grid(w, m, n)
    out.append((
        "deflm16",
        op.tr(aw(ww), op.rt(mm, x)) - op.v_rt(op.tr(ww, mm), al(x)) - op.tl(am(mm), op.w_rt(ww, x)),
        (wl, mlab, gl),
    ))

    # twist conditions: phi is a map of Hom-vector spaces and the cross
    # actions commute with the twists (needed for the semidirect product)
    (vv,) = ml.grid(v)
    out.append(("phi-twist", aw(op.phi(vv)) - op.phi(av(vv)), (vl,)))
    ww, mm = ml.grid(w, m)
    out.append(("cross-twist-r", av(op.tr(ww, mm)) - op.tr(aw(ww), am(mm)), (wl, mlab)))
    mm, ww = ml.grid(m, w)
    out.append(("cross-twist-l", av(op.tl(mm, ww)) - op.tl(am(mm), aw(ww)), (mlab, wl)))
    return out


def check_lm_representation(o: LMObject, r: LMRepresentation) -> CheckReport:
    """V and W bimodules (same handedness as the algebra) plus all compatibility identities."""
    report = CheckReport("LM representation")
    a = o.algebra
    for prefix, mod in (("V.", r.v_module()), ("W.", r.w_module())):
        for item in bimodule_residuals(a, mod):
            report.add(residual_check(prefix + item[0], item[1], item[2]))
    for item in representation_residuals(o, r):
        report.add(residual_check(*item))
    return report


def adjoint_object(a: HomAlgebra) -> LMObject:
    """``id: g -> g`` with the adjoint bimodule."""
    return LMObject(a, adjoint_bimodule(a), identity(a.dim))


def adjoint_representation(o: LMObject, validate: bool = True) -> LMRepresentation:
    """``(V, W, phi) = (M, g, f)`` with ``w |> m = w.m`` and ``m <| w = m.w``."""
    if validate:
        report = check_lm_object(o)
        if not report.passed:
            raise ConstructionError("adjoint representation needs a valid LM object", report)
    a, b = o.algebra, o.module
    return LMRepresentation(
        v_space=b.space,
        w_space=a.space,
        phi=o.anchor,
        v_left=b.left,
        v_right=b.right,
        w_left=a.product,
        w_right=a.product,
        cross_r=b.left,
        cross_l=b.right,
    )


def lm_semidirect(o: LMObject, r: LMRepresentation, validate: bool = True) -> LMObject:
    """The LM object on ``(M + V, g + W, f + phi)`` built from a representation."""
    if validate:
        report = CheckReport("semidirect inputs")
        report.merge(check_lm_object(o), "object.")
        report.merge(check_lm_representation(o, r), "rep.")
        if not report.passed:
            raise ConstructionError("LM semidirect product refused", report)
    return _block_object(o, r)


def _block_object(o: LMObject, r: LMRepresentation, cochain=None) -> LMObject:
    # cochain, if given, is (omega, mu, nu, theta) in tensor/matrix form
    n, m, v, w = o.n, o.m, r.v, r.w
    a, b = o.algebra, o.module
    prod = zeros(n + w, n + w, n + w)
    prod[:n, :n, :n] = a.product
    prod[:n, n:, n:] = r.w_left
    prod[n:, :n, n:] = r.w_right
    left = zeros(n + w, m + v, m + v)
    left[:n, :m, :m] = b.left
    left[:n, m:, m:] = r.v_left
    left[n:, :m, m:] = r.cross_r
    right = zeros(m + v, n + w, m + v)
    right[:m, :n, :m] = b.right
    right[m:, :n, m:] = r.v_right
    right[:m, n:, m:] = r.cross_l
    anchor = zeros(n + w, m + v)
    anchor[:n, :m] = o.anchor
    anchor[n:, m:] = r.phi
    if cochain is not None:
        omega, mu, nu, theta = cochain
        prod[:n, :n, n:] = omega
        left[:n, :m, m:] = mu
        right[:m, :n, m:] = nu
        anchor[n:, :m] = theta
    g_space = a.space.direct_sum(r.w_space)
    m_space = b.space.direct_sum(r.v_space)
    algebra = HomAlgebra(g_space, prod, a.handedness)
    module = Bimodule(m_space, left, right, n + w)
    return LMObject(algebra, module, anchor)


def tensor_square_lm(a: HomAlgebra, validate: bool = True) -> LMObject:
    """The object ``mul: g (x) g -> g`` with twist ``alpha (x) alpha``.

    Actions: ``x.(a(x)b) = (xa)(x)alpha(b)`` and ``(a(x)b).x = alpha(a)(x)(bx)``;
    basis ``e_i (x) e_j`` in lexicographic order.  Only the input is
    validated: the anchor conditions hold whenever triple products vanish,
    but the module axiom L2 can fail (it already does for the algebra with
    ``e1 e1 = e2``), so run :func:`check_lm_object` on the result.
    """
    if validate:
        report = CheckReport("tensor square input", [
            residual_check(*leibniz_residual(a, LEFT)),
            residual_check(*multiplicativity_residual(a)),
        ])
        if a.handedness != LEFT or not report.passed:
            raise ConstructionError("tensor square needs a multiplicative left Hom-Leibniz algebra", report)
    n = a.dim
    c, A = a.product, a.twist
    twist = np.ascontiguousarray(np.einsum("pi,qj->pqij", A, A).reshape(n * n, n * n))
    left = np.einsum("xap,qb->xabpq", c, A).reshape(n, n * n, n * n)
    right = np.ascontiguousarray(np.einsum("pa,bxq->abxpq", A, c).reshape(n * n, n, n * n))
    anchor = np.ascontiguousarray(c.reshape(n * n, n).T)
    labels = tuple(f"{p}⊗{q}" for p in a.labels for q in a.labels)
    module = Bimodule(HomVectorSpace(twist, labels), np.ascontiguousarray(left), right, n)
    return LMObject(a, module, anchor)


def zero_object(n: int, m: int, handedness: str = LEFT) -> LMObject:
    """All products, actions and the anchor zero; identity twists."""
    a = HomAlgebra(HomVectorSpace.identity(n, "e"), zeros(n, n, n), handedness)
    b = Bimodule(HomVectorSpace.identity(m, "m"), zeros(n, m, m), zeros(m, n, m), n)
    return LMObject(a, b, zeros(n, m))


__all__ = [
    "LMObject",
    "LMMorphism",
    "LMRepresentation",
    "Ops",
    "adjoint_object",
    "adjoint_representation",
    "anchor_residuals",
    "check_lm_morphism",
    "check_lm_object",
    "check_lm_representation",
    "check_symmetric_lm_object",
    "check_via_semidirect_hom",
    "is_equivariant",
    "lm_object_residuals",
    "lm_semidirect",
    "representation_residuals",
    "tensor_square_lm",
    "zero_object",
]
