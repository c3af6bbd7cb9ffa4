"""Abelian extensions of LM objects and their classification by 2-cocycles.

An extension stores the total object together with explicit inclusions
``i = (i0: W -> g^, i1: V -> M^)`` and projections ``p = (p0, p1)``, so an
extension given in any basis can be checked.  Constructors in this module
always produce the block basis ``g^ = g + W``, ``M^ = M + V``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _multilinear as ml
from .cohomology import Cochain2, CochainSpace, check_2_cocycle, solve_coboundary
from .homcore import ConstructionError, _arrays_equal
from .lmcat import (
    LMMorphism,
    LMObject,
    LMRepresentation,
    _block_object,
    check_lm_morphism,
    check_lm_object,
    check_lm_representation,
)
from .qlinalg import as_qarray, identity, rank, rref, solve, zeros
from .reports import Check, CheckReport, residual_check


@dataclass(frozen=True, eq=False)
class AbelianExtension:
    """``0 -> (V, W, phi) -i-> (M^, g^, f^) -p-> (M, g, f) -> 0``."""

    total: LMObject
    base: LMObject
    fiber: LMRepresentation
    i0: np.ndarray  # (dim g^, w)
    i1: np.ndarray  # (dim M^, v)
    p0: np.ndarray  # (n, dim g^)
    p1: np.ndarray  # (m, dim M^)

    def __post_init__(self):
        for name in ("i0", "i1", "p0", "p1"):
            object.__setattr__(self, name, as_qarray(getattr(self, name)))
        t, o, r = self.total, self.base, self.fiber
        expected = {"i0": (t.n, r.w), "i1": (t.m, r.v), "p0": (o.n, t.n), "p1": (o.m, t.m)}
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {getattr(self, name).shape}")


@dataclass(frozen=True, eq=False)
class Splitting:
    """Linear sections ``sigma0: g -> g^`` and ``sigma1: M -> M^`` of the projections."""

    sigma0: np.ndarray
    sigma1: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "sigma0", as_qarray(self.sigma0))
        object.__setattr__(self, "sigma1", as_qarray(self.sigma1))


def _block_maps(n: int, m: int, v: int, w: int):
    i0 = zeros(n + w, w)
    i0[n:, :] = identity(w)
    i1 = zeros(m + v, v)
    i1[m:, :] = identity(v)
    p0 = zeros(n, n + w)
    p0[:, :n] = identity(n)
    p1 = zeros(m, m + v)
    p1[:, :m] = identity(m)
    return i0, i1, p0, p1


def canonical_splitting(e: AbelianExtension) -> Splitting:
    """The block inclusion ``x -> x + 0``, ``m -> m + 0`` (block-form extensions only)."""
    o, r = e.base, e.fiber
    i0, i1, p0, p1 = _block_maps(o.n, o.m, r.v, r.w)
    if not all(_arrays_equal(a, b) for a, b in ((e.i0, i0), (e.i1, i1), (e.p0, p0), (e.p1, p1))):
        raise ValueError("extension is not in block form; use find_splitting")
    s0 = zeros(o.n + r.w, o.n)
    s0[: o.n, :] = identity(o.n)
    s1 = zeros(o.m + r.v, o.m)
    s1[: o.m, :] = identity(o.m)
    return Splitting(s0, s1)


def find_splitting(e: AbelianExtension) -> Splitting:
    """Some pair of linear sections of ``p`` (the block inclusion for block-form extensions)."""
    cols0 = [solve(e.p0, col) for col in identity(e.base.n).T]
    cols1 = [solve(e.p1, col) for col in identity(e.base.m).T]
    if any(c is None for c in cols0 + cols1):
        raise ValueError("projection is not surjective")
    s0 = np.stack(cols0, axis=1) if cols0 else zeros(e.total.n, 0)
    s1 = np.stack(cols1, axis=1) if cols1 else zeros(e.total.m, 0)
    return Splitting(s0, s1)


def _left_inverse(i: np.ndarray) -> np.ndarray:
    """``L`` with ``L i = id`` for an injective ``i``."""
    k, w = i.shape
    _, r, rows = rref(i.T)
    if r != w:
        raise ValueError("inclusion is not injective")
    square = i[rows, :]
    inv = np.stack([solve(square, col) for col in identity(w).T], axis=1) if w else zeros(0, 0)
    out = zeros(w, k)
    out[:, rows] = inv
    return out


def _inverse(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n) or rank(a) != n:
        raise ValueError("matrix is not invertible")
    return np.stack([solve(a, col) for col in identity(n).T], axis=1) if n else zeros(0, 0)


def _exact_check(name: str, i: np.ndarray, p: np.ndarray) -> Check:
    total = i.shape[0]
    ok = not np.any(p.dot(i) != 0) and rank(i) + rank(p) == total
    return Check(name, ok, note="" if ok else "image of i differs from kernel of p")


def check_splitting(e: AbelianExtension, s: Splitting) -> CheckReport:
    """``p0 sigma0 = id`` and ``p1 sigma1 = id``; ``f^ sigma1 = sigma0 f`` is advisory.

    The anchor identity would force the extracted ``theta`` to vanish, so it
    is reported rather than required.
    """
    o = e.base
    if s.sigma0.shape != (e.total.n, o.n) or s.sigma1.shape != (e.total.m, o.m):
        raise ValueError("splitting shapes do not match the extension")
    report = CheckReport("splitting")
    report.add(Check("section-g", _arrays_equal(e.p0.dot(s.sigma0), identity(o.n))))
    report.add(Check("section-M", _arrays_equal(e.p1.dot(s.sigma1), identity(o.m))))
    (mm,) = ml.grid(o.m)
    res = e.total.f(ml.apply(s.sigma1, mm)) - ml.apply(s.sigma0, o.f(mm))
    report.add(residual_check("anchor", res, (o.module.labels,), advisory=True))
    return report


def check_extension(e: AbelianExtension) -> CheckReport:
    """Exactness, commutation with the anchors, abelian fiber, and validity of the total object."""
    t, o, r = e.total, e.base, e.fiber
    report = CheckReport("abelian extension")
    report.add(_exact_check("exact-g", e.i0, e.p0))
    report.add(_exact_check("exact-M", e.i1, e.p1))
    report.add(Check("anchor-p", _arrays_equal(e.p0.dot(t.anchor), o.anchor.dot(e.p1))))
    report.add(Check("anchor-i", _arrays_equal(t.anchor.dot(e.i1), e.i0.dot(r.phi))))
    ww = r.w_space.labels
    vl = r.v_space.labels
    w1, w2 = ml.grid(r.w, r.w)
    I0 = lambda u: ml.apply(e.i0, u)  # noqa: E731
    I1 = lambda u: ml.apply(e.i1, u)  # noqa: E731
    report.add(residual_check("abelian-W", t.algebra.mul(I0(w1), I0(w2)), (ww, ww)))
    w1, vv = ml.grid(r.w, r.v)
    report.add(residual_check("abelian-W-on-V-left", t.module.act_left(I0(w1), I1(vv)), (ww, vl)))
    vv, w1 = ml.grid(r.v, r.w)
    report.add(residual_check("abelian-W-on-V-right", t.module.act_right(I1(vv), I0(w1)), (vl, ww)))
    report.merge(check_lm_object(t), "total.")
    report.merge(check_lm_morphism(t, o, LMMorphism(e.p0, e.p1)), "p.")
    if report.passed:
        induced = induced_bimodule(e, find_splitting(e))
        report.add(Check("fiber", induced == r, note="" if induced == r else "induced bimodule differs from fiber"))
    return report


def extension_from_cocycle(o: LMObject, r: LMRepresentation, c: Cochain2) -> AbelianExtension:
    """The block extension with ``(x + w)(y + w') = xy + omega(x, y) + x.w' + w.y`` and so on.

    Refuses non-cocycles (naming the failing condition) and cochains that
    are not compatible with the twists.
    """
    inputs = CheckReport("extension inputs")
    inputs.merge(check_lm_object(o), "object.")
    inputs.merge(check_lm_representation(o, r), "rep.")
    if not inputs.passed:
        raise ConstructionError("extension needs a valid object and representation", inputs)
    cocycle = check_2_cocycle(o, r, c)
    if not cocycle.passed:
        raise ConstructionError("cochain is not a 2-cocycle", cocycle)
    if not CochainSpace(2, o, r, True).is_compatible(c):
        raise ConstructionError("cochain does not commute with the twists", _compat_report(o, r, c))
    total = _block_object(o, r, c.as_tuple())
    report = check_lm_object(total)
    if not report.passed:
        raise ConstructionError("extension object fails the axioms", report)
    return AbelianExtension(total, o, r, *_block_maps(o.n, o.m, r.v, r.w))


def _compat_report(o: LMObject, r: LMRepresentation, c: Cochain2) -> CheckReport:
    a, b = o.algebra, o.module
    av = lambda u: ml.apply(r.v_space.twist, u)  # noqa: E731
    aw = lambda u: ml.apply(r.w_space.twist, u)  # noqa: E731
    gl, mlab = a.labels, b.labels
    report = CheckReport("twist compatibility")
    x, y = ml.grid(o.n, o.n)
    report.add(residual_check(
        "omega", aw(ml.bilinear(c.omega, x, y)) - ml.bilinear(c.omega, a.alpha(x), a.alpha(y)), (gl, gl)
    ))
    x, mm = ml.grid(o.n, o.m)
    report.add(residual_check(
        "mu", av(ml.bilinear(c.mu, x, mm)) - ml.bilinear(c.mu, a.alpha(x), b.alpha(mm)), (gl, mlab)
    ))
    mm, x = ml.grid(o.m, o.n)
    report.add(residual_check(
        "nu", av(ml.bilinear(c.nu, mm, x)) - ml.bilinear(c.nu, b.alpha(mm), a.alpha(x)), (mlab, gl)
    ))
    (mm,) = ml.grid(o.m)
    report.add(residual_check("theta", aw(ml.apply(c.theta, mm)) - ml.apply(c.theta, b.alpha(mm)), (mlab,)))
    return report


def _require_splitting(e: AbelianExtension, s: Splitting):
    report = check_splitting(e, s)
    if not report.passed:
        raise ConstructionError("not a splitting of this extension", report)


def extract_cocycle(e: AbelianExtension, s: Splitting | None = None) -> Cochain2:
    """``omega(x, y) = s0(x)s0(y) - s0(xy)`` and likewise ``mu``, ``nu``, ``theta``, in fiber coordinates."""
    s = s or find_splitting(e)
    _require_splitting(e, s)
    t, o = e.total, e.base
    a, b = o.algebra, o.module
    S0 = lambda u: ml.apply(s.sigma0, u)  # noqa: E731
    S1 = lambda u: ml.apply(s.sigma1, u)  # noqa: E731
    x, y = ml.grid(o.n, o.n)
    omega = t.algebra.mul(S0(x), S0(y)) - S0(a.mul(x, y))
    x, mm = ml.grid(o.n, o.m)
    mu = t.module.act_left(S0(x), S1(mm)) - S1(b.act_left(x, mm))
    mm, x = ml.grid(o.m, o.n)
    nu = t.module.act_right(S1(mm), S0(x)) - S1(b.act_right(mm, x))
    (mm,) = ml.grid(o.m)
    theta = t.f(S1(mm)) - S0(o.f(mm))
    # every value must lie in the fiber before taking coordinates
    for name, val, p in (("omega", omega, e.p0), ("mu", mu, e.p1), ("nu", nu, e.p1), ("theta", theta, e.p0)):
        if np.any(ml.apply(p, val) != 0):
            raise ArithmeticError(f"{name} does not land in the fiber")
    L0, L1 = _left_inverse(e.i0), _left_inverse(e.i1)
    c = Cochain2(
        np.ascontiguousarray(ml.apply(L0, omega)),
        np.ascontiguousarray(ml.apply(L1, mu)),
        np.ascontiguousarray(ml.apply(L1, nu)),
        np.ascontiguousarray(ml.apply(L0, theta).T),
    )
    cocycle = check_2_cocycle(o, e.fiber, c)
    if not cocycle.passed:
        raise ConstructionError("extracted cochain is not a 2-cocycle", cocycle)
    return c


def induced_bimodule(e: AbelianExtension, s: Splitting | None = None) -> LMRepresentation:
    """The representation on ``(V, W, phi)`` read off the total object through ``s``.

    ``x.v = s0(x).v``, ``x.w = s0(x)w``, ``w |> m = w.s1(m)``,
    ``m <| w = s1(m).w`` and their mirror images.
    """
    s = s or find_splitting(e)
    _require_splitting(e, s)
    t, o = e.total, e.base
    r = e.fiber
    L0, L1 = _left_inverse(e.i0), _left_inverse(e.i1)
    S0 = lambda u: ml.apply(s.sigma0, u)  # noqa: E731
    S1 = lambda u: ml.apply(s.sigma1, u)  # noqa: E731
    I0 = lambda u: ml.apply(e.i0, u)  # noqa: E731
    I1 = lambda u: ml.apply(e.i1, u)  # noqa: E731
    on_v = lambda u: np.ascontiguousarray(ml.apply(L1, u))  # noqa: E731
    on_w = lambda u: np.ascontiguousarray(ml.apply(L0, u))  # noqa: E731
    x, vv = ml.grid(o.n, r.v)
    v_left = on_v(t.module.act_left(S0(x), I1(vv)))
    vv, x = ml.grid(r.v, o.n)
    v_right = on_v(t.module.act_right(I1(vv), S0(x)))
    x, ww = ml.grid(o.n, r.w)
    w_left = on_w(t.algebra.mul(S0(x), I0(ww)))
    ww, x = ml.grid(r.w, o.n)
    w_right = on_w(t.algebra.mul(I0(ww), S0(x)))
    ww, mm = ml.grid(r.w, o.m)
    cross_r = on_v(t.module.act_left(I0(ww), S1(mm)))
    mm, ww = ml.grid(o.m, r.w)
    cross_l = on_v(t.module.act_right(S1(mm), I0(ww)))
    phi = L0.dot(t.anchor).dot(e.i1)
    v_space = type(r.v_space)(L1.dot(t.module.space.twist).dot(e.i1), r.v_space.labels)
    w_space = type(r.w_space)(L0.dot(t.algebra.space.twist).dot(e.i0), r.w_space.labels)
    return LMRepresentation(v_space, w_space, phi, v_left, v_right, w_left, w_right, cross_r, cross_l)


def are_equivalent(e: AbelianExtension, e2: AbelianExtension, compat: bool = True) -> LMMorphism | None:
    """A morphism ``F`` with ``F i = i'`` and ``p' F = p``, or ``None``.

    Solves ``c - c' = D1(b)`` for the cocycles extracted through
    :func:`find_splitting`; on success ``F`` sends ``s0(x) + i0(w)`` to
    ``s0'(x) + i0'(b0(x) + w)`` (and likewise on modules) and is re-verified.
    """
    if not (e.base == e2.base) or not (e.fiber == e2.fiber):
        raise ValueError("extensions of different objects or by different representations")
    o, r = e.base, e.fiber
    s, s2 = find_splitting(e), find_splitting(e2)
    diff = extract_cocycle(e, s) - extract_cocycle(e2, s2)
    b = solve_coboundary(o, r, diff, compat)
    if b is None:
        return None
    F0 = np.hstack([s2.sigma0 + e2.i0.dot(b.n0), e2.i0]).dot(_inverse(np.hstack([s.sigma0, e.i0])))
    F1 = np.hstack([s2.sigma1 + e2.i1.dot(b.n1), e2.i1]).dot(_inverse(np.hstack([s.sigma1, e.i1])))
    F = LMMorphism(F0, F1)
    report = check_lm_morphism(e.total, e2.total, F)
    report.add(Check("F i = i'", _arrays_equal(F0.dot(e.i0), e2.i0) and _arrays_equal(F1.dot(e.i1), e2.i1)))
    report.add(Check("p' F = p", _arrays_equal(e2.p0.dot(F0), e.p0) and _arrays_equal(e2.p1.dot(F1), e.p1)))
    if not report.passed:
        raise ArithmeticError("equivalence morphism failed verification:\n" + report.summary())
    return F


__all__ = [
    "AbelianExtension",
    "Splitting",
    "are_equivalent",
    "canonical_splitting",
    "check_extension",
    "check_splitting",
    "extension_from_cocycle",
    "extract_cocycle",
    "find_splitting",
    "induced_bimodule",
]
