"""Deformations of LM objects over truncated polynomial rings.

A deformation replaces every structure map by a power series in ``lambda``:
``f + lambda theta_1 + ...``, ``xy + lambda omega_1(x, y) + ...`` and so on,
with the twists unchanged.  Structure tensors with
:class:`TruncatedPolynomial` entries plug straight into the axiom checkers
of :mod:`homleibniz.lmcat`, so "the deformed object is an LM object modulo
``lambda^(N+1)``" is an ordinary check on an ordinary object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import _multilinear as ml
from .cohomology import Cochain1, Cochain2, apply_d1, check_2_cocycle, cohomology_dim, solve_coboundary
from .homcore import Bimodule, HomAlgebra
from .lmcat import LMObject, adjoint_representation, check_lm_object, lm_object_residuals
from .qlinalg import as_qarray, identity, zeros
from .reports import CheckReport, residual_check


class TruncatedPolynomial:
    """An element of ``Q[lambda] / (lambda^(order+1))``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [Fraction(c) if not isinstance(c, int) else c for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        if not coeffs:
            raise ValueError("a truncated polynomial needs at least one coefficient")
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedPolynomial":
        return cls([c], order)

    @classmethod
    def monomial(cls, c, degree: int, order: int) -> "TruncatedPolynomial":
        return cls([0] * degree + [c], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other):
        if isinstance(other, TruncatedPolynomial):
            if other.order != self.order:
                raise ValueError("truncation orders differ")
            return other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return (other,) + (0,) * self.order
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedPolynomial([a + b for a, b in zip(self.coeffs, o)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPolynomial([-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedPolynomial([a - b for a, b in zip(self.coeffs, o)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedPolynomial([b - a for a, b in zip(self.coeffs, o)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedPolynomial([a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = len(self.coeffs)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                b = o[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return f"TruncatedPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def coefficient(arr, k: int) -> np.ndarray:
    """The ``lambda^k`` coefficients of an array of polynomials (or plain scalars)."""
    arr = np.asarray(arr, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = x[k] if isinstance(x, TruncatedPolynomial) else (x if k == 0 else 0)
    return out


def _series(terms: Sequence[np.ndarray], order: int) -> np.ndarray:
    """Entrywise ``sum_k lambda^k terms[k]`` as an array of polynomials."""
    shape = np.asarray(terms[0], dtype=object).shape
    out = np.empty(shape, dtype=object)
    arrays = [np.asarray(t, dtype=object) for t in terms]
    for idx in np.ndindex(*shape):
        out[idx] = TruncatedPolynomial([a[idx] for a in arrays[: order + 1]], order)
    return out


# ------------------------------------------------------------- data types


@dataclass(frozen=True, eq=False)
class DeformationData:
    """A base object and the cochains ``c_1, c_2, ...`` of a (formal) deformation.

    ``cochains[k-1]`` holds ``(omega_k, mu_k, nu_k, theta_k)``; an
    infinitesimal deformation has exactly one.
    """

    base: LMObject
    cochains: tuple[Cochain2, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "cochains", tuple(self.cochains))
        o = self.base
        shapes = {"omega": (o.n, o.n, o.n), "mu": (o.n, o.m, o.m), "nu": (o.m, o.n, o.m), "theta": (o.n, o.m)}
        for k, c in enumerate(self.cochains, start=1):
            for name, shape in shapes.items():
                if getattr(c, name).shape != shape:
                    raise ValueError(f"order {k} piece {name} must have shape {shape}")

    @classmethod
    def infinitesimal(cls, base: LMObject, cochain: Cochain2) -> "DeformationData":
        return cls(base, (cochain,))

    @property
    def cochain(self) -> Cochain2:
        """The first-order term (zero if there is none)."""
        if self.cochains:
            return self.cochains[0]
        o = self.base
        return Cochain2(zeros(o.n, o.n, o.n), zeros(o.n, o.m, o.m), zeros(o.m, o.n, o.m), zeros(o.n, o.m))


@dataclass(frozen=True, eq=False)
class NijenhuisPair:
    n0: np.ndarray  # g -> g
    n1: np.ndarray  # M -> M

    def __post_init__(self):
        object.__setattr__(self, "n0", as_qarray(self.n0))
        object.__setattr__(self, "n1", as_qarray(self.n1))

    @classmethod
    def scalar(cls, o: LMObject, c) -> "NijenhuisPair":
        return cls(c * identity(o.n), c * identity(o.m))

    def as_cochain(self) -> Cochain1:
        return Cochain1(self.n0, self.n1)


@dataclass(frozen=True, eq=False)
class FormalMorphism:
    """``Phi = id + lambda phi_1 + ...`` on g and ``Psi = id + lambda psi_1 + ...`` on M."""

    g_terms: tuple = ()
    m_terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "g_terms", tuple(as_qarray(t) for t in self.g_terms))
        object.__setattr__(self, "m_terms", tuple(as_qarray(t) for t in self.m_terms))

    @classmethod
    def first_order(cls, c: Cochain1) -> "FormalMorphism":
        return cls((c.n0,), (c.n1,))

    def series(self, n: int, m: int, order: int):
        g = [identity(n)] + list(self.g_terms) + [zeros(n, n)] * order
        mm = [identity(m)] + list(self.m_terms) + [zeros(m, m)] * order
        return _series(g, order), _series(mm, order)


# --------------------------------------------------------- deformed objects


def deformed_structure(d: DeformationData, order: int | None = None) -> LMObject:
    """The base object with structure maps ``sum_k lambda^k (structure)_k``.

    Coefficients live in ``Q[lambda]/(lambda^(order+1))``; the default order
    is ``max(2, number of cochains)``, enough for every axiom to be checked
    exactly (the axioms are at most quadratic in the structure maps).
    """
    o = d.base
    order = max(2, len(d.cochains)) if order is None else order
    cs = d.cochains[:order]
    a, b = o.algebra, o.module
    product = _series([a.product] + [c.omega for c in cs], order)
    left = _series([b.left] + [c.mu for c in cs], order)
    right = _series([b.right] + [c.nu for c in cs], order)
    anchor = _series([o.anchor] + [c.theta for c in cs], order)
    algebra = HomAlgebra(a.space, product, a.handedness)
    module = Bimodule(b.space, left, right, o.n)
    return LMObject(algebra, module, anchor)


def structure_object(o: LMObject, c: Cochain2) -> LMObject:
    """The object with product ``omega``, actions ``mu``, ``nu`` and anchor ``theta`` (same twists)."""
    a, b = o.algebra, o.module
    return LMObject(
        HomAlgebra(a.space, c.omega, a.handedness),
        Bimodule(b.space, c.mu, c.nu, o.n),
        c.theta,
    )


class InfinitesimalReport(NamedTuple):
    cocycle_ok: bool
    structure_ok: bool
    deformation_ok: bool
    cocycle: CheckReport
    structure: CheckReport
    deformation: CheckReport

    def summary(self) -> str:
        return "\n".join(r.summary() for r in (self.cocycle, self.structure, self.deformation))


def check_infinitesimal_deformation(d: DeformationData) -> InfinitesimalReport:
    """Test whether ``c = d.cochain`` generates an infinitesimal deformation.

    Three independent verdicts: ``c`` is a 2-cocycle with adjoint
    coefficients; ``(omega, mu, nu, theta)`` is itself an LM object; and the
    deformed object passes every LM axiom over ``Q[lambda]/(lambda^3)``.  The
    third should equal the conjunction of the first two.
    """
    o = d.base
    c = d.cochain
    r = adjoint_representation(o)
    cocycle = check_2_cocycle(o, r, c)
    structure = check_lm_object(structure_object(o, c))
    deformed = check_lm_object(deformed_structure(DeformationData.infinitesimal(o, c), order=2))
    deformed.title = "deformed object mod λ^3"
    return InfinitesimalReport(cocycle.passed, structure.passed, deformed.passed, cocycle, structure, deformed)


def check_formal_deformation(d: DeformationData, order: int | None = None) -> CheckReport:
    """Every LM axiom of the deformed object, coefficient by coefficient.

    Items are named ``"order k: <identity>"`` for ``k = 0..order``.  Order 0
    is the validity of the base object and order 1 is the 2-cocycle
    condition on ``c_1`` together with its twist compatibility.
    """
    order = len(d.cochains) if order is None else order
    obj = deformed_structure(d, order)
    residuals = lm_object_residuals(obj)
    report = CheckReport(f"formal deformation through λ^{order}")
    for k in range(order + 1):
        for name, res, labels in residuals:
            report.add(residual_check(f"order {k}: {name}", coefficient(res, k), labels))
    return report


# ----------------------------------------------------------------- Nijenhuis


def _nijenhuis_products(o: LMObject, p: NijenhuisPair) -> Cochain2:
    """Deformed products ``x._N y``, ``x._N m``, ``m._N x`` and ``f N1 - N0 f``."""
    return apply_d1(o, adjoint_representation(o, validate=False), p.as_cochain())


def is_nijenhuis(o: LMObject, p: NijenhuisPair) -> CheckReport:
    """Conditions (i)-(iv) of a Nijenhuis operator, itemized.

    Also reported, as advisory items: the premise ``f N1 = N0 f`` and
    commutation of ``N0``, ``N1`` with the twists.
    """
    n, m = o.n, o.m
    if p.n0.shape != (n, n) or p.n1.shape != (m, m):
        raise ValueError("Nijenhuis pair shapes do not match the object")
    c = _nijenhuis_products(o, p)
    a, b = o.algebra, o.module
    N0 = lambda u: ml.apply(p.n0, u)  # noqa: E731
    N1 = lambda u: ml.apply(p.n1, u)  # noqa: E731
    gl, mlab = a.labels, b.labels
    checks = []
    (mm,) = ml.grid(m)
    theta = c.theta
    checks.append(residual_check("(i) image in kernel", N0(ml.apply(theta, mm)), (mlab,)))
    x, y = ml.grid(n, n)
    checks.append(residual_check(
        "(ii) product", N0(ml.bilinear(c.omega, x, y)) - a.mul(N0(x), N0(y)), (gl, gl)
    ))
    x, mm = ml.grid(n, m)
    checks.append(residual_check(
        "(iii) left action", N1(ml.bilinear(c.mu, x, mm)) - b.act_left(N0(x), N1(mm)), (gl, mlab)
    ))
    mm, x = ml.grid(m, n)
    checks.append(residual_check(
        "(iv) right action", N1(ml.bilinear(c.nu, mm, x)) - b.act_right(N1(mm), N0(x)), (mlab, gl)
    ))
    (mm,) = ml.grid(m)
    checks.append(residual_check("anchor premise f N1 = N0 f", ml.apply(theta, mm), (mlab,), advisory=True))
    (x,) = ml.grid(n)
    checks.append(residual_check("N0 commutes with twist", N0(a.alpha(x)) - a.alpha(N0(x)), (gl,), advisory=True))
    checks.append(residual_check("N1 commutes with twist", N1(b.alpha(mm)) - b.alpha(N1(mm)), (mlab,), advisory=True))
    return CheckReport("Nijenhuis operator", checks)


def nijenhuis_conditions(o: LMObject, p: NijenhuisPair) -> CheckReport:
    """The expanded quadratic conditions on ``N`` (one item per structure map)."""
    a, b = o.algebra, o.module
    n, m = o.n, o.m
    N0 = lambda u: ml.apply(p.n0, u)  # noqa: E731
    N1 = lambda u: ml.apply(p.n1, u)  # noqa: E731
    f = o.f
    gl, mlab = a.labels, b.labels
    checks = []
    (mm,) = ml.grid(m)
    checks.append(residual_check("anchor", N0(f(N1(mm)) - N0(f(mm))), (mlab,)))
    x, y = ml.grid(n, n)
    checks.append(residual_check(
        "product",
        a.mul(N0(x), N0(y)) - N0(a.mul(N0(x), y)) - N0(a.mul(x, N0(y))) + N0(N0(a.mul(x, y))),
        (gl, gl),
    ))
    x, mm = ml.grid(n, m)
    lt = b.act_left
    checks.append(residual_check(
        "left action",
        lt(N0(x), N1(mm)) - N1(lt(N0(x), mm)) - N1(lt(x, N1(mm))) + N1(N1(lt(x, mm))),
        (gl, mlab),
    ))
    mm, x = ml.grid(m, n)
    rt = b.act_right
    checks.append(residual_check(
        "right action",
        rt(N1(mm), N0(x)) - N1(rt(mm, N0(x))) - N1(rt(N1(mm), x)) + N1(N1(rt(mm, x))),
        (mlab, gl),
    ))
    return CheckReport("Nijenhuis conditions", checks)


def deformation_from_nijenhuis(o: LMObject, p: NijenhuisPair) -> DeformationData:
    """The infinitesimal deformation with cochain ``D1(N0, N1)`` (adjoint coefficients)."""
    report = is_nijenhuis(o, p)
    if not report.passed:
        from .homcore import ConstructionError

        raise ConstructionError("not a Nijenhuis operator", report)
    return DeformationData.infinitesimal(o, _nijenhuis_products(o, p))


def _morphism_residuals(src: LMObject, dst: LMObject, P0, P1):
    # the four defining identities of a morphism, over any coefficient ring
    sa, da, sb, db = src.algebra, dst.algebra, src.module, dst.module
    gl, mlab = sa.labels, sb.labels
    n, m = src.n, src.m
    out = []
    (mm,) = ml.grid(m)
    out.append(("anchor", dst.f(P1(mm)) - P0(src.f(mm)), (mlab,)))
    x, y = ml.grid(n, n)
    out.append(("product", P0(sa.mul(x, y)) - da.mul(P0(x), P0(y)), (gl, gl)))
    x, mm = ml.grid(n, m)
    out.append(("left action", P1(sb.act_left(x, mm)) - db.act_left(P0(x), P1(mm)), (gl, mlab)))
    mm, x = ml.grid(m, n)
    out.append(("right action", P1(sb.act_right(mm, x)) - db.act_right(P1(mm), P0(x)), (mlab, gl)))
    return out


def is_trivial_deformation(d: DeformationData, p: NijenhuisPair, order: int = 2) -> CheckReport:
    """Whether ``(id + lambda N0, id + lambda N1)`` maps the deformed object to the base.

    The four morphism identities are checked exactly over
    ``Q[lambda]/(lambda^(order+1))``; commutation with the twists is advisory.
    """
    o = d.base
    src = deformed_structure(d, order)
    T0 = _series([identity(o.n), p.n0], order)
    T1 = _series([identity(o.m), p.n1], order)
    P0 = lambda u: ml.apply(T0, u)  # noqa: E731
    P1 = lambda u: ml.apply(T1, u)  # noqa: E731
    report = CheckReport(f"trivial deformation mod λ^{order + 1}")
    for name, res, labels in _morphism_residuals(src, o, P0, P1):
        report.add(residual_check(name, res, labels))
    (x,) = ml.grid(o.n)
    report.add(residual_check("twist-g", P0(o.algebra.alpha(x)) - o.algebra.alpha(P0(x)), (o.algebra.labels,), advisory=True))
    (mm,) = ml.grid(o.m)
    report.add(residual_check("twist-M", P1(o.module.alpha(mm)) - o.module.alpha(P1(mm)), (o.module.labels,), advisory=True))
    return report


def check_formal_morphism(a: DeformationData, b: DeformationData, F: FormalMorphism, order: int = 1) -> CheckReport:
    """Whether ``F`` maps the ``a``-deformation to the ``b``-deformation modulo ``lambda^(order+1)``."""
    o = a.base
    src = deformed_structure(a, order)
    dst = deformed_structure(b, order)
    T0, T1 = F.series(o.n, o.m, order)
    P0 = lambda u: ml.apply(T0, u)  # noqa: E731
    P1 = lambda u: ml.apply(T1, u)  # noqa: E731
    report = CheckReport(f"formal morphism mod λ^{order + 1}")
    for name, res, labels in _morphism_residuals(src, dst, P0, P1):
        report.add(residual_check(name, res, labels))
    return report


# ------------------------------------------------- equivalence and rigidity


def deformations_equivalent_first_order(
    a: DeformationData, b: DeformationData, compat: bool = True
) -> Cochain1 | None:
    """A 1-cochain ``N`` with ``a.cochain - b.cochain = D1(N)``, or ``None``.

    Then ``(id + lambda N0, id + lambda N1)`` maps the ``a``-deformation to
    the ``b``-deformation to first order.  With ``compat`` the search runs
    over twist-compatible 1-cochains.
    """
    o = a.base
    if not (b.base == o):
        raise ValueError("deformations of different objects")
    return solve_coboundary(o, adjoint_representation(o, validate=False), a.cochain - b.cochain, compat)


class RigidityReport(NamedTuple):
    z_dim: int
    b_dim: int
    h_dim: int
    rigid_by_criterion: bool

    def summary(self) -> str:
        verdict = "rigid (H^2 = 0)" if self.rigid_by_criterion else "criterion not met (H^2 != 0)"
        return f"dim Z^2 = {self.z_dim}, dim B^2 = {self.b_dim}, dim H^2 = {self.h_dim}: {verdict}"


def is_rigid(o: LMObject, compat: bool = True) -> RigidityReport:
    """The sufficient criterion ``H^2 = 0`` with adjoint coefficients."""
    dims = cohomology_dim(o, adjoint_representation(o), 2, compat)
    return RigidityReport(dims.z_dim, dims.b_dim, dims.h_dim, dims.h_dim == 0)


__all__ = [
    "DeformationData",
    "FormalMorphism",
    "InfinitesimalReport",
    "NijenhuisPair",
    "RigidityReport",
    "TruncatedPolynomial",
    "check_formal_deformation",
    "check_formal_morphism",
    "check_infinitesimal_deformation",
    "coefficient",
    "deformation_from_nijenhuis",
    "deformations_equivalent_first_order",
    "deformed_structure",
    "is_nijenhuis",
    "is_rigid",
    "is_trivial_deformation",
    "nijenhuis_conditions",
    "structure_object",
]
