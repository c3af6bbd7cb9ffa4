"""Cochains of an LM object with coefficients in a representation.

Degree ``k`` cochains are tuples of multilinear maps ("pieces").  Every piece
is stored as a tensor with one axis per argument and the target last, e.g.
``omega[i, j, t]`` is the t-th coordinate of ``omega(e_i, e_j)``.  The
degree-one pieces ``n0, n1`` and the 2-cochain piece ``theta`` are linear
maps and are exposed as ``(target, source)`` matrices like every other map
in the package.

Flat coordinates concatenate the pieces in layout order, each flattened
row-major in its tensor form.  With ``(n, m, v, w)`` the dimensions of
``(g, M, V, W)``:

* degree 1: ``n0 (g -> W)``, ``n1 (M -> V)``;
* degree 2: ``omega (g g -> W)``, ``nu (M g -> V)``, ``mu (g M -> V)``,
  ``theta (M -> W)``;
* degree 3: ``xyz (g g g -> W)``, ``mxy``, ``xmy``, ``xym`` (-> V) and
  ``mx``, ``xm`` (-> W).
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import _multilinear as ml
from .homcore import Bimodule, HomAlgebra, multiplicativity_residual
from .lmcat import LMObject, LMRepresentation, Ops
from .qlinalg import Subspace, as_qarray, column_space, identity, is_zero, nullspace, quotient_dim, rref, solve, zeros
from .reports import CheckReport, residual_check

# name, argument kinds, target kind; "g"/"M" arguments, "W"/"V" targets
LAYOUTS = {
    1: (("n0", "g", "W"), ("n1", "M", "V")),
    2: (("omega", "gg", "W"), ("nu", "Mg", "V"), ("mu", "gM", "V"), ("theta", "M", "W")),
    3: (
        ("xyz", "ggg", "W"),
        ("mxy", "Mgg", "V"),
        ("xmy", "gMg", "V"),
        ("xym", "ggM", "V"),
        ("mx", "Mg", "W"),
        ("xm", "gM", "W"),
    ),
}

# pieces exposed as (target, source) matrices rather than tensors
_MATRIX_PIECES = {"n0", "n1", "theta"}


class _Cochain:
    """Shared behaviour: pieces are exact arrays, equality is exact."""

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_qarray(getattr(self, f.name)))

    def pieces(self) -> dict[str, np.ndarray]:
        """Pieces in tensor form (arguments first, target last)."""
        out = {}
        for f in fields(self):
            val = getattr(self, f.name)
            out[f.name] = val.T if f.name in _MATRIX_PIECES else val
        return out

    @classmethod
    def from_pieces(cls, pieces: dict):
        kwargs = {}
        for f in fields(cls):
            val = as_qarray(pieces[f.name])
            kwargs[f.name] = np.ascontiguousarray(val.T) if f.name in _MATRIX_PIECES else val
        return cls(**kwargs)

    def is_zero(self) -> bool:
        return all(is_zero(getattr(self, f.name)) for f in fields(self))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return all(
            getattr(self, f.name).shape == getattr(other, f.name).shape
            and not np.any(getattr(self, f.name) != getattr(other, f.name))
            for f in fields(self)
        )

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(**{
            f.name: getattr(self, f.name) + sign * getattr(other, f.name) for f in fields(self)
        })

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)(**{f.name: -getattr(self, f.name) for f in fields(self)})

    def scale(self, c):
        return type(self)(**{f.name: c * getattr(self, f.name) for f in fields(self)})


@dataclass(frozen=True, eq=False)
class Cochain1(_Cochain):
    n0: np.ndarray  # (w, n)
    n1: np.ndarray  # (v, m)


@dataclass(frozen=True, eq=False)
class Cochain2(_Cochain):
    omega: np.ndarray  # (n, n, w)
    mu: np.ndarray  # (n, m, v)
    nu: np.ndarray  # (m, n, v)
    theta: np.ndarray  # (w, m)

    def as_tuple(self):
        return self.omega, self.mu, self.nu, self.theta


@dataclass(frozen=True, eq=False)
class Cochain3(_Cochain):
    xyz: np.ndarray
    xym: np.ndarray
    xmy: np.ndarray
    mxy: np.ndarray
    xm: np.ndarray
    mx: np.ndarray


COCHAIN_TYPES = {1: Cochain1, 2: Cochain2, 3: Cochain3}


def _require_multiplicative(a: HomAlgebra):
    check = residual_check(*multiplicativity_residual(a))
    if not check.passed:
        raise ValueError(
            f"cohomology needs a multiplicative algebra; twist fails at {check.witness}"
        )


class CochainSpace:
    """Layout, flat index and twist-compatible subspace of ``C^k``."""

    def __init__(self, k: int, o: LMObject, r: LMRepresentation, compat: bool = True):
        if k not in LAYOUTS:
            raise ValueError(f"cochain degree must be 1, 2 or 3, got {k}")
        _require_multiplicative(o.algebra)
        self.k, self.o, self.r, self.compat = k, o, r, compat
        self.dims = {"g": o.n, "M": o.m, "V": r.v, "W": r.w}
        self._twists = {
            "g": o.algebra.twist,
            "M": o.module.twist,
            "V": r.v_space.twist,
            "W": r.w_space.twist,
        }
        self.layout = LAYOUTS[k]
        self.shapes = {
            name: tuple(self.dims[a] for a in args) + (self.dims[t],)
            for name, args, t in self.layout
        }
        self.offsets = {}
        pos = 0
        for name, _, _ in self.layout:
            self.offsets[name] = pos
            pos += int(np.prod(self.shapes[name]))
        self.raw_dim = pos

    @property
    def cochain_type(self):
        return COCHAIN_TYPES[self.k]

    def flat_index(self, piece: str, *index: int) -> int:
        """Position of ``(piece, argument indices..., target index)`` in flat coordinates."""
        return self.offsets[piece] + int(np.ravel_multi_index(index, self.shapes[piece]))

    def flatten(self, c) -> np.ndarray:
        pieces = c.pieces()
        out = zeros(self.raw_dim)
        for name, _, _ in self.layout:
            t = pieces[name]
            if t.shape != self.shapes[name]:
                raise ValueError(f"piece {name} has shape {t.shape}, expected {self.shapes[name]}")
            out[self.offsets[name]: self.offsets[name] + t.size] = t.reshape(-1)
        return out

    def unflatten(self, vec):
        vec = as_qarray(vec).reshape(-1)
        if vec.shape[0] != self.raw_dim:
            raise ValueError(f"vector has length {vec.shape[0]}, expected {self.raw_dim}")
        pieces = {}
        for name, _, _ in self.layout:
            size = int(np.prod(self.shapes[name]))
            start = self.offsets[name]
            pieces[name] = vec[start: start + size].reshape(self.shapes[name])
        return self.cochain_type.from_pieces(pieces)

    def zero(self):
        return self.unflatten(zeros(self.raw_dim))

    def _piece_operator(self, args: str, target: str) -> np.ndarray:
        # c -> alpha_target o c - c o (alpha_1 x ... x alpha_k) on row-major vec(c)
        lhs = np.array([[1]], dtype=object)
        rhs = np.array([[1]], dtype=object)
        for a in args:
            lhs = np.kron(lhs, identity(self.dims[a]))
            rhs = np.kron(rhs, self._twists[a].T)
        lhs = np.kron(lhs, self._twists[target])
        rhs = np.kron(rhs, identity(self.dims[target]))
        return lhs - rhs

    @cached_property
    def compat_subspace(self) -> Subspace:
        """Cochains commuting with the twists, piece by piece.

        The operator is block diagonal over pieces, so the canonical basis is
        the block diagonal of the per-piece canonical bases.
        """
        blocks, pivots = [], []
        for name, args, target in self.layout:
            size = int(np.prod(self.shapes[name]))
            if size == 0:
                continue
            sub = nullspace(self._piece_operator(args, target))
            blocks.append((self.offsets[name], sub))
            pivots.extend(self.offsets[name] + p for p in sub.pivots)
        total = sum(sub.dim for _, sub in blocks)
        basis = zeros(self.raw_dim, total)
        col = 0
        for offset, sub in blocks:
            basis[offset: offset + sub.ambient_dim, col: col + sub.dim] = sub.basis
            col += sub.dim
        return Subspace(self.raw_dim, basis, tuple(pivots))

    @property
    def space(self) -> Subspace:
        """The working space: the compatible subspace, or everything when ``compat`` is off."""
        return self.compat_subspace if self.compat else Subspace.full(self.raw_dim)

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_cochains(self) -> list:
        sp = self.space
        return [self.unflatten(sp.basis[:, j]) for j in range(sp.dim)]

    def coordinates(self, c) -> np.ndarray:
        """Coordinates of ``c`` in :attr:`space`; raises if ``c`` lies outside it."""
        coords = self.space.coordinates(self.flatten(c))
        if coords is None:
            raise ValueError("cochain is not twist-compatible")
        return coords

    def is_compatible(self, c) -> bool:
        return self.flatten(c) in self.compat_subspace

    def __repr__(self):
        return f"CochainSpace(k={self.k}, raw_dim={self.raw_dim}, dim={self.dim})"


def cochain_space(k: int, o: LMObject, r: LMRepresentation, compat: bool = True) -> CochainSpace:
    return CochainSpace(k, o, r, compat)


def raw_dimension(k: int, n: int, m: int, v: int, w: int) -> int:
    """``n^k w + k n^(k-1) m v + (k-1) n^(k-2) m w`` (the last term absent for k = 1)."""
    total = n**k * w + k * n ** (k - 1) * m * v
    if k >= 2:
        total += (k - 1) * n ** (k - 2) * m * w
    return total


# ---------------------------------------------------------------- D1 and D2


def _check_shapes(space: CochainSpace, c):
    for name, t in c.pieces().items():
        if t.shape != space.shapes[name]:
            raise ValueError(f"piece {name} has shape {t.shape}, expected {space.shapes[name]}")


def _d1_residuals(o: LMObject, r: LMRepresentation, c: Cochain1) -> dict:
    op = Ops(o, r)
    N0 = lambda u: ml.apply(c.n0, u)  # noqa: E731
    N1 = lambda u: ml.apply(c.n1, u)  # noqa: E731
    n, m = o.n, o.m
    out = {}
    x, y = ml.grid(n, n)
    out["omega"] = op.w_rt(N0(x), y) + op.w_lt(x, N0(y)) - N0(op.mul(x, y))
    x, mm = ml.grid(n, m)
    out["mu"] = op.tr(N0(x), mm) + op.v_lt(x, N1(mm)) - N1(op.lt(x, mm))
    mm, x = ml.grid(m, n)
    out["nu"] = op.v_rt(N1(mm), x) + op.tl(mm, N0(x)) - N1(op.rt(mm, x))
    (mm,) = ml.grid(m)
    out["theta"] = op.phi(N1(mm)) - N0(op.f(mm))
    return out


def apply_d1(o: LMObject, r: LMRepresentation, c: Cochain1) -> Cochain2:
    """The coboundary of a 1-cochain ``(N0, N1)``."""
    _check_shapes(CochainSpace(1, o, r, compat=False), c)
    return Cochain2.from_pieces(_d1_residuals(o, r, c))


def _d2_residuals(o: LMObject, r: LMRepresentation, c: Cochain2) -> dict:
    op = Ops(o, r)
    om = lambda a, b: ml.bilinear(c.omega, a, b)  # noqa: E731
    mu = lambda a, b: ml.bilinear(c.mu, a, b)  # noqa: E731
    nu = lambda a, b: ml.bilinear(c.nu, a, b)  # noqa: E731
    th = lambda u: ml.apply(c.theta, u)  # noqa: E731
    al, am, mul, lt, rt = op.alpha, op.alpha_m, op.mul, op.lt, op.rt
    n, m = o.n, o.m
    out = {}

    x, y, z = ml.grid(n, n, n)
    out["xyz"] = (
        op.w_lt(al(x), om(y, z)) + om(al(x), mul(y, z))
        - om(mul(x, y), al(z)) - op.w_rt(om(x, y), al(z))
        - op.w_lt(al(y), om(x, z)) - om(al(y), mul(x, z))
    )
    x, y, mm = ml.grid(n, n, m)
    out["xym"] = (
        op.v_lt(al(x), mu(y, mm)) + mu(al(x), lt(y, mm))
        - op.tr(om(x, y), am(mm)) - mu(mul(x, y), am(mm))
        - op.v_lt(al(y), mu(x, mm)) - mu(al(y), lt(x, mm))
    )
    x, mm, y = ml.grid(n, m, n)
    out["xmy"] = (
        op.v_lt(al(x), nu(mm, y)) + mu(al(x), rt(mm, y))
        - nu(lt(x, mm), al(y)) - op.v_rt(mu(x, mm), al(y))
        - op.tl(am(mm), om(x, y)) - nu(am(mm), mul(x, y))
    )
    mm, x, y = ml.grid(m, n, n)
    out["mxy"] = (
        op.tl(am(mm), om(x, y)) + nu(am(mm), mul(x, y))
        - op.v_rt(nu(mm, x), al(y)) - nu(rt(mm, x), al(y))
        - op.v_lt(al(x), nu(mm, y)) - mu(al(x), rt(mm, y))
    )
    x, mm = ml.grid(n, m)
    out["xm"] = th(lt(x, mm)) + op.phi(mu(x, mm)) - om(x, op.f(mm)) - op.w_lt(x, th(mm))
    mm, x = ml.grid(m, n)
    out["mx"] = th(rt(mm, x)) + op.phi(nu(mm, x)) - om(op.f(mm), x) - op.w_rt(th(mm), x)
    return out


def apply_d2(o: LMObject, r: LMRepresentation, c: Cochain2) -> Cochain3:
    """The coboundary of a 2-cochain ``(omega, mu, nu, theta)``, all six components."""
    _check_shapes(CochainSpace(2, o, r, compat=False), c)
    return Cochain3.from_pieces(_d2_residuals(o, r, c))


# ------------------------------------------------------------ cocycle checks

_D1_NAMES = {"omega": ("(x,y)", "gg"), "mu": ("(x,m)", "gM"), "nu": ("(m,x)", "Mg"), "theta": ("(m)", "M")}
_D2_NAMES = {
    "xyz": ("(x,y,z)", "ggg"),
    "xym": ("(x,y,m)", "ggM"),
    "xmy": ("(x,m,y)", "gMg"),
    "mxy": ("(m,x,y)", "Mgg"),
    "xm": ("(x,m)", "gM"),
    "mx": ("(m,x)", "Mg"),
}


def _labels(o: LMObject, kinds: str):
    return tuple(o.algebra.labels if k == "g" else o.module.labels for k in kinds)


def check_1_cocycle(o: LMObject, r: LMRepresentation, c: Cochain1) -> CheckReport:
    """The four 1-cocycle equations, one report item each."""
    _check_shapes(CochainSpace(1, o, r, compat=False), c)
    res = _d1_residuals(o, r, c)
    return CheckReport("1-cocycle", [
        residual_check(label, res[key], _labels(o, kinds)) for key, (label, kinds) in _D1_NAMES.items()
    ])


def check_2_cocycle(o: LMObject, r: LMRepresentation, c: Cochain2) -> CheckReport:
    """The six 2-cocycle equations, one report item each."""
    _check_shapes(CochainSpace(2, o, r, compat=False), c)
    res = _d2_residuals(o, r, c)
    return CheckReport("2-cocycle", [
        residual_check(label, res[key], _labels(o, kinds)) for key, (label, kinds) in _D2_NAMES.items()
    ])


# ----------------------------------------------------------------- matrices


def _assemble(source: CochainSpace, target_coords, apply) -> np.ndarray:
    cols = [target_coords(apply(c)) for c in source.basis_cochains()]
    if cols:
        return np.stack(cols, axis=1)
    # empty domain: the row count still comes from the target
    return zeros(target_coords(None), 0)


def d1_matrix(o: LMObject, r: LMRepresentation, compat: bool = True) -> np.ndarray:
    """Matrix of ``D1`` from ``C^1`` to ``C^2`` in working-space coordinates.

    With ``compat`` both sides use coordinates in the twist-compatible
    subspaces (the image of a compatible cochain is verified to be
    compatible); otherwise raw flat coordinates.
    """
    c1 = CochainSpace(1, o, r, compat)
    c2 = CochainSpace(2, o, r, compat)

    def coords(img):
        if img is None:
            return c2.dim
        return c2.coordinates(img)

    return _assemble(c1, coords, lambda c: apply_d1(o, r, c))


def d2_matrix(o: LMObject, r: LMRepresentation, compat: bool = True) -> np.ndarray:
    """Matrix of ``D2``: columns indexed by the working basis of ``C^2``, rows by raw ``C^3``."""
    c2 = CochainSpace(2, o, r, compat)
    c3 = CochainSpace(3, o, r, compat=False)

    def coords(img):
        if img is None:
            return c3.raw_dim
        return c3.flatten(img)

    return _assemble(c2, coords, lambda c: apply_d2(o, r, c))


# --------------------------------------------------------------- cohomology


class CohomologyDims(NamedTuple):
    z_dim: int
    b_dim: int
    h_dim: int
    d0: str = ""


def _d0_image(o: LMObject, r: LMRepresentation, space: CochainSpace) -> list[Cochain1]:
    # D0(w) = (x -> -w.x, m -> -(w |> m)) on twist-fixed w (all w without compat)
    n, m, w = o.n, o.m, r.w
    if space.compat:
        fixed = nullspace(r.w_space.twist - identity(w))
    else:
        fixed = Subspace.full(w)
    out = []
    for j in range(fixed.dim):
        ww = fixed.basis[:, j]
        n0 = -np.einsum("s,sit->ti", ww, r.w_right) if n else zeros(w, 0)
        n1 = -np.einsum("s,sat->ta", ww, r.cross_r) if m else zeros(r.v, 0)
        out.append(Cochain1(np.ascontiguousarray(n0), np.ascontiguousarray(n1)))
    return out


def cohomology_dim(
    o: LMObject,
    r: LMRepresentation,
    k: int,
    compat: bool = True,
    d0: str = "zero",
) -> CohomologyDims:
    """``(dim Z^k, dim B^k, dim H^k)`` for ``k`` in ``{1, 2}``.

    ``B^2`` is the image of ``D1`` and is checked to lie inside ``Z^2``.  For
    ``k = 1`` the boundaries come from the chosen ``D0``: ``"zero"`` (the
    default) or ``"inner"``, ``D0(w) = (x -> -w.x, m -> -(w |> m))``, which is
    used only after ``D1 o D0 = 0`` has been verified on this instance.
    """
    if k == 2:
        d1 = d1_matrix(o, r, compat)
        d2 = d2_matrix(o, r, compat)
        c2 = CochainSpace(2, o, r, compat)
        z = nullspace(d2) if d2.shape[0] else Subspace.full(c2.dim)
        b = column_space(d1) if d1.shape[1] else Subspace.zero(c2.dim)
        return CohomologyDims(z.dim, b.dim, quotient_dim(z, b))
    if k == 1:
        c1 = CochainSpace(1, o, r, compat)
        d1 = d1_matrix(o, r, compat)
        z = nullspace(d1) if d1.shape[0] else Subspace.full(c1.dim)
        if d0 == "zero":
            b = Subspace.zero(c1.dim)
        elif d0 == "inner":
            image = _d0_image(o, r, c1)
            for c in image:
                if not apply_d1(o, r, c).is_zero():
                    raise ValueError("D1 o D0 is not zero on this instance; the inner D0 is not a differential here")
            vecs = [c1.coordinates(c) for c in image]
            b = Subspace.span(np.stack(vecs, axis=1), c1.dim) if vecs else Subspace.zero(c1.dim)
        else:
            raise ValueError(f"unknown D0 strategy {d0!r}; use 'zero' or 'inner'")
        return CohomologyDims(z.dim, b.dim, quotient_dim(z, b), d0)
    raise ValueError(f"cohomology is computed in degrees 1 and 2, got {k}")


def d1_rank(o: LMObject, r: LMRepresentation, compat: bool = True) -> int:
    return rref(d1_matrix(o, r, compat))[1]


def d2_rank(o: LMObject, r: LMRepresentation, compat: bool = True) -> int:
    return rref(d2_matrix(o, r, compat))[1]


# ---------------------------------------------- coboundary of (g, alpha) itself



def solve_coboundary(o: LMObject, r: LMRepresentation, c: Cochain2, compat: bool = True) -> Cochain1 | None:
    """A 1-cochain ``b`` with ``D1(b) = c``, or ``None``; the witness is re-verified."""
    c2 = CochainSpace(2, o, r, compat)
    vec = c2.space.coordinates(c2.flatten(c))
    if vec is None:
        return None
    c1 = CochainSpace(1, o, r, compat)
    d1 = d1_matrix(o, r, compat)
    if d1.shape[1] == 0:
        return c1.zero() if not np.any(vec != 0) else None
    x = solve(d1, vec)
    if x is None:
        return None
    b = c1.unflatten(c1.space.basis.dot(x))
    if not apply_d1(o, r, b) == c:
        raise ArithmeticError("coboundary witness does not reproduce the cochain")
    return b

def cs_coboundary(a: HomAlgebra, b: Bimodule, k: int, omega) -> np.ndarray:
    """Hom-Leibniz coboundary of a k-cochain ``omega: g^k -> M``.

    ``delta omega(u_1..u_{k+1})`` is
    ``sum_i (-1)^(i+1) a^(k-1)(u_i).omega(..^u_i..)``
    ``+ (-1)^(k+1) omega(u_1..u_k).a^(k-1)(u_{k+1})``
    ``+ sum_{i<j} (-1)^i omega(a(u_1)..^u_i..u_i u_j..a(u_{k+1}))``, where in
    the last sum the product sits in slot j and every other argument is
    twisted.  ``omega`` has shape ``(n,)*k + (m,)``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    omega = as_qarray(omega)
    n, m = a.dim, b.dim
    if omega.shape != (n,) * k + (m,):
        raise ValueError(f"cochain must have shape {(n,) * k + (m,)}, got {omega.shape}")
    u = ml.grid(*([n] * (k + 1)))
    ak = ml.matpow(a.twist, k - 1)
    Ak = lambda x: ml.apply(ak, x)  # noqa: E731
    w = lambda *args: ml.multilinear(omega, *args)  # noqa: E731
    out = zeros(*([n] * (k + 1) + [m]))
    for i in range(k):
        sign = 1 if i % 2 == 0 else -1
        rest = u[:i] + u[i + 1:]
        out = out + sign * b.act_left(Ak(u[i]), w(*rest))
    sign = 1 if (k + 1) % 2 == 0 else -1
    out = out + sign * b.act_right(w(*u[:k]), Ak(u[k]))
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            sign = -1 if i % 2 == 0 else 1  # (-1)^(i+1) with 0-based i
            args = []
            for s in range(k + 1):
                if s == i:
                    continue
                args.append(a.mul(u[i], u[j]) if s == j else a.alpha(u[s]))
            out = out + sign * w(*args)
    return out


__all__ = [
    "solve_coboundary",
    "COCHAIN_TYPES",
    "LAYOUTS",
    "Cochain1",
    "Cochain2",
    "Cochain3",
    "CochainSpace",
    "CohomologyDims",
    "apply_d1",
    "apply_d2",
    "check_1_cocycle",
    "check_2_cocycle",
    "cochain_space",
    "cohomology_dim",
    "cs_coboundary",
    "d1_matrix",
    "d1_rank",
    "d2_matrix",
    "d2_rank",
    "raw_dimension",
]
