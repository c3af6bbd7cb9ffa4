"""Dialgebras: one Hom-vector space with two products ``-|`` and ``|-``.

A :class:`Dialgebra` stores ``dashv[i, j, k]`` (``e_i -| e_j``) and
``vdash[i, j, k]`` (``e_i |- e_j``) in the same structure-constant layout
as :class:`~homleibniz.homcore.HomAlgebra`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _multilinear as ml
from .homcore import LEFT, RIGHT, ConstructionError, HomAlgebra, HomVectorSpace, _arrays_equal
from .lmcat import LMObject, check_lm_object, check_symmetric_lm_object
from .qlinalg import as_qarray
from .reports import CheckReport, residual_check


@dataclass(frozen=True, eq=False)
class Dialgebra:
    space: HomVectorSpace
    dashv: np.ndarray
    vdash: np.ndarray

    def __post_init__(self):
        n = self.space.dim
        for name in ("dashv", "vdash"):
            t = as_qarray(getattr(self, name))
            if t.shape != (n, n, n):
                raise ValueError(f"{name} must have shape {(n, n, n)}, got {t.shape}")
            object.__setattr__(self, name, t)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self):
        return self.space.labels

    def alpha(self, u):
        return self.space.alpha(u)

    def left(self, u, v):
        """``u -| v``"""
        return ml.bilinear(self.dashv, u, v)

    def right(self, u, v):
        """``u |- v``"""
        return ml.bilinear(self.vdash, u, v)

    def vdash_algebra(self) -> HomAlgebra:
        return HomAlgebra(self.space, self.vdash, LEFT)

    def dashv_algebra(self) -> HomAlgebra:
        return HomAlgebra(self.space, self.dashv, RIGHT)

    def __eq__(self, other):
        if not isinstance(other, Dialgebra):
            return NotImplemented
        return (
            self.space == other.space
            and _arrays_equal(self.dashv, other.dashv)
            and _arrays_equal(self.vdash, other.vdash)
        )


# One evaluator per identity.  D1 and DL1 are the same identity, as are D2
# and DR1, so the checkers below share these functions.


def _triples(d: Dialgebra):
    return ml.grid(d.dim, d.dim, d.dim)


def _d1(d: Dialgebra):
    x, y, z = _triples(d)
    al, L, R = d.alpha, d.left, d.right
    return R(al(x), L(y, z)) - L(R(x, y), al(z)) - L(al(y), R(x, z))


def _d2(d: Dialgebra):
    x, y, z = _triples(d)
    al, L, R = d.alpha, d.left, d.right
    return L(R(x, y), al(z)) - R(al(x), L(y, z)) - R(L(x, z), al(y))


def _dl2(d: Dialgebra):
    x, y, z = _triples(d)
    al, L, R = d.alpha, d.left, d.right
    return R(al(x), R(y, z)) - R(L(x, y), al(z)) - R(al(y), R(x, z))


def _dl3(d: Dialgebra):
    x, y, z = _triples(d)
    al, L, R = d.alpha, d.left, d.right
    return L(al(x), R(y, z)) - L(L(x, y), al(z)) - R(al(y), L(x, z))


def _dr2(d: Dialgebra):
    x, y, z = _triples(d)
    al, L, R = d.alpha, d.left, d.right
    return L(L(x, y), al(z)) - L(al(x), R(y, z)) - L(L(x, z), al(y))


def _dr3(d: Dialgebra):
    x, y, z = _triples(d)
    al, L, R = d.alpha, d.left, d.right
    return R(L(x, y), al(z)) - R(al(x), R(y, z)) - L(R(x, z), al(y))


def _left_leibniz_vdash(d: Dialgebra):
    x, y, z = _triples(d)
    al, R = d.alpha, d.right
    return R(al(x), R(y, z)) - R(R(x, y), al(z)) - R(al(y), R(x, z))


def _right_leibniz_dashv(d: Dialgebra):
    x, y, z = _triples(d)
    al, L = d.alpha, d.left
    return L(L(x, y), al(z)) - L(L(x, z), al(y)) - L(al(x), L(y, z))


def _multiplicativity(d: Dialgebra):
    x, y = ml.grid(d.dim, d.dim)
    al = d.alpha
    lab = (d.labels,) * 2
    return [
        residual_check("multiplicativity-dashv", al(d.left(x, y)) - d.left(al(x), al(y)), lab, advisory=True),
        residual_check("multiplicativity-vdash", al(d.right(x, y)) - d.right(al(x), al(y)), lab, advisory=True),
    ]


def _report(title: str, d: Dialgebra, items) -> CheckReport:
    labels = (d.labels,) * 3
    report = CheckReport(title, [residual_check(name, fn(d), labels) for name, fn in items])
    for c in _multiplicativity(d):
        report.add(c)
    return report


def check_admissible(d: Dialgebra) -> CheckReport:
    """``|-`` left Hom-Leibniz, ``-|`` right Hom-Leibniz, and D1, D2.

    Multiplicativity of the twist over both products is listed as advisory.
    """
    return _report("Hom-Leibniz-admissible dialgebra", d, [
        ("left-leibniz", _left_leibniz_vdash),
        ("right-leibniz", _right_leibniz_dashv),
        ("D1", _d1),
        ("D2", _d2),
    ])


def check_left_dialgebra(d: Dialgebra) -> CheckReport:
    return _report("left Hom-Leibniz dialgebra", d, [
        ("left-leibniz", _left_leibniz_vdash),
        ("DL1", _d1),
        ("DL2", _dl2),
        ("DL3", _dl3),
    ])


def check_right_dialgebra(d: Dialgebra) -> CheckReport:
    return _report("right Hom-Leibniz dialgebra", d, [
        ("right-leibniz", _right_leibniz_dashv),
        ("DR1", _d2),
        ("DR2", _dr2),
        ("DR3", _dr3),
    ])


def leibniz_from_admissible(d: Dialgebra) -> tuple[HomAlgebra, HomAlgebra]:
    """``xy = x |- y - y -| x`` (left) and ``x.y = x -| y - y |- x`` (right)."""
    report = check_admissible(d)
    if not report.passed:
        raise ConstructionError("dialgebra is not Hom-Leibniz-admissible", report)
    left = d.vdash - d.dashv.transpose(1, 0, 2)
    right = d.dashv - d.vdash.transpose(1, 0, 2)
    return (
        HomAlgebra(d.space, np.ascontiguousarray(left), LEFT),
        HomAlgebra(d.space, np.ascontiguousarray(right), RIGHT),
    )


def dialgebra_from_lm(o: LMObject, validate: bool = True) -> Dialgebra:
    """``m -| n = m . f(n)`` and ``m |- n = f(m) . n`` on the module.

    ``validate=False`` skips the LM object check, for inspecting the
    products of objects that fail some axiom.
    """
    if validate:
        report = check_lm_object(o)
        if not report.passed:
            raise ConstructionError("dialgebra needs a valid LM object", report)
    b = o.module
    dashv = np.einsum("aic,ib->abc", b.right, o.anchor)
    vdash = np.einsum("ia,ibc->abc", o.anchor, b.left)
    return Dialgebra(b.space, np.ascontiguousarray(dashv), np.ascontiguousarray(vdash))


def symmetric_lm_products(o: LMObject) -> tuple[HomAlgebra, HomAlgebra]:
    """Left and right Hom-Leibniz products on the module of a symmetric object.

    ``mn = f(m).n - n.f(m)`` and ``m.n = m.f(n) - f(n).m``, the same tensors
    as :func:`leibniz_from_admissible` applied to :func:`dialgebra_from_lm`.
    """
    report = check_symmetric_lm_object(o)
    if not report.passed:
        raise ConstructionError("object is not symmetric (left and right)", report)
    b, f = o.module, o.anchor
    f_dot_n = np.einsum("ia,ibc->abc", f, b.left)      # [m, n] -> f(m).n
    n_dot_f = np.einsum("bic,ia->abc", b.right, f)     # [m, n] -> n.f(m)
    m_dot_f = np.einsum("aic,ib->abc", b.right, f)     # [m, n] -> m.f(n)
    fn_dot_m = np.einsum("ib,iac->abc", f, b.left)     # [m, n] -> f(n).m
    return (
        HomAlgebra(b.space, np.ascontiguousarray(f_dot_n - n_dot_f), LEFT),
        HomAlgebra(b.space, np.ascontiguousarray(m_dot_f - fn_dot_m), RIGHT),
    )


__all__ = [
    "Dialgebra",
    "check_admissible",
    "check_left_dialgebra",
    "check_right_dialgebra",
    "dialgebra_from_lm",
    "leibniz_from_admissible",
    "symmetric_lm_products",
]
