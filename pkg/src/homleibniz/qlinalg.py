"""Exact rational linear algebra on dense numpy object arrays.

Scalars are exact rationals: Python ints for integral values and
:class:`fractions.Fraction` otherwise (ints keep the common all-integer case
fast; they are promoted to Fractions by division, which only happens in
:func:`rref`).  Matrices and tensors are numpy arrays with ``dtype=object``
whose entries are such scalars (or anything that supports exact field
arithmetic, see :mod:`homleibniz.deform`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "Q",
    "ContainmentError",
    "Subspace",
    "as_qarray",
    "zeros",
    "identity",
    "parse_rational",
    "format_rational",
    "rref",
    "rank",
    "nullspace",
    "column_space",
    "solve",
    "quotient_dim",
    "is_zero",
]

Q = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


class ContainmentError(ArithmeticError):
    """Raised when a subspace that should lie inside another does not."""


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or ``"-p/q"`` (ASCII or U+2212 minus).

    Integers are accepted as-is.  Floats and zero denominators are rejected.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}")
    sign, num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), den)
    return -value if sign in ("-", "−") else value


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_qarray(data, shape=None) -> np.ndarray:
    """Convert nested sequences (ints, Fractions, rational strings) to an exact array."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx, val in np.ndenumerate(arr):
        out[idx] = _to_scalar(parse_rational(val) if isinstance(val, str) else val)
    return out


def _to_scalar(val):
    # integral values are kept as Python ints: exact, and much faster than
    # Fraction in the elementwise sums that dominate the checkers
    if isinstance(val, bool):
        raise ValueError(f"not a rational: {val!r}")
    if isinstance(val, (int, np.integer)):
        return int(val)
    if isinstance(val, Fraction):
        return val.numerator if val.denominator == 1 else val
    return val


def zeros(*shape) -> np.ndarray:
    if len(shape) == 1 and isinstance(shape[0], tuple):
        shape = shape[0]
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def rref(m) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns ``(R, rank, pivot_columns)``.  The input is not modified.
    """
    a = as_qarray(m)
    if a.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = a.shape
    # plain lists are much faster than object-array indexing here
    work = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pivot_row = work[r]
        inv = 1 / Fraction(pivot_row[c])
        if inv != 1:
            pivot_row = [x * inv for x in pivot_row]
            work[r] = pivot_row
        for i in range(rows):
            if i != r:
                factor = work[i][c]
                if factor != 0:
                    row = work[i]
                    work[i] = [x - factor * y for x, y in zip(row, pivot_row)]
        pivots.append(c)
        r += 1
    out = zeros(rows, cols)
    for i, row in enumerate(work):
        out[i, :] = row
    return out, len(pivots), pivots


def rank(m) -> int:
    return rref(m)[1]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``Q^ambient_dim`` with its canonical (RREF) basis.

    ``basis`` has shape ``(ambient_dim, dim)``: one basis vector per column.
    The canonical basis is the list of nonzero rows of the RREF of any
    spanning set, so two equal subspaces have identical ``basis`` arrays.
    """

    ambient_dim: int
    basis: np.ndarray
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        """Canonical subspace spanned by the columns of ``vectors``."""
        vecs = as_qarray(vectors).reshape(ambient_dim, -1) if np.size(vectors) else zeros(ambient_dim, 0)
        if vecs.shape[1] == 0:
            return cls(ambient_dim, zeros(ambient_dim, 0), ())
        r, k, piv = rref(vecs.T)
        return cls(ambient_dim, np.ascontiguousarray(r[:k].T), tuple(piv))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim), tuple(range(ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, zeros(ambient_dim, 0), ())

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def coordinates(self, v):
        """Coordinates of ``v`` in the canonical basis, or ``None`` if ``v`` is outside."""
        v = as_qarray(v).reshape(self.ambient_dim)
        coords = v[list(self.pivots)] if self.pivots else zeros(0)
        back = self.basis.dot(coords) if self.dim else zeros(self.ambient_dim)
        if any(a != b for a, b in zip(back, v)):
            return None
        return coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(other.basis[:, j] in self for j in range(other.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and all(a == b for a, b in zip(self.basis.flat, other.basis.flat))
        )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def nullspace(m) -> Subspace:
    """Kernel of ``m`` as a canonical subspace of ``Q^cols``."""
    a = as_qarray(m)
    rows, cols = a.shape
    r, k, piv = rref(a)
    free = [c for c in range(cols) if c not in piv]
    vecs = zeros(cols, len(free))
    for j, fc in enumerate(free):
        vecs[fc, j] = Fraction(1)
        for i, pc in enumerate(piv):
            vecs[pc, j] = -r[i, fc]
    return Subspace.span(vecs, cols)


def column_space(m) -> Subspace:
    a = as_qarray(m)
    return Subspace.span(a, a.shape[0])


def solve(m, rhs):
    """One solution of ``m x = rhs`` (free variables set to 0), or ``None``."""
    a = as_qarray(m)
    b = as_qarray(rhs).reshape(-1)
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ValueError(f"rhs has length {b.shape[0]}, expected {rows}")
    aug = zeros(rows, cols + 1)
    aug[:, :cols] = a
    aug[:, cols] = b
    r, k, piv = rref(aug)
    if cols in piv:
        return None
    x = zeros(cols)
    for i, pc in enumerate(piv):
        x[pc] = r[i, cols]
    return x


def quotient_dim(z: Subspace, b: Subspace) -> int:
    """``dim z - dim b`` after verifying ``b`` lies inside ``z``."""
    if z.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces live in different ambient spaces")
    if not z.contains_subspace(b):
        raise ContainmentError("boundary space is not contained in cycle space")
    return z.dim - b.dim
