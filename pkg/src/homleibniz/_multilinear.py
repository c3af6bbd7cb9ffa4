# Batched evaluation of (multi)linear maps on object arrays.
#
# A "batch" of vectors is an array of shape (..., dim).  Basis grids give every
# argument slot its own broadcast axis, so a formula written with these
# helpers evaluates an identity on all basis tuples at once and returns a
# residual of shape (d1, ..., dk, target_dim).

from __future__ import annotations

import numpy as np

from .qlinalg import identity


def grid(*dims: int) -> list[np.ndarray]:
    """Basis vectors for ``len(dims)`` argument slots, broadcast against each other."""
    k = len(dims)
    out = []
    for j, d in enumerate(dims):
        shape = [1] * k + [d]
        shape[j] = d
        out.append(identity(d).reshape(shape))
    return out


def apply(mat: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Linear map given as a (target x source) matrix, applied to a batch."""
    return np.einsum("ts,...s->...t", mat, u)


def bilinear(tensor: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Bilinear map ``tensor[i, j, t]`` evaluated on broadcast batches ``u``, ``v``."""
    u, v = _broadcast(u, v)
    return np.einsum("ijt,...i,...j->...t", tensor, u, v)


def trilinear(tensor, u, v, w):
    u, v, w = _broadcast(u, v, w)
    return np.einsum("ijkt,...i,...j,...k->...t", tensor, u, v, w)


_LETTERS = "abcdefghijklmnopqrs"


def multilinear(tensor: np.ndarray, *vecs: np.ndarray) -> np.ndarray:
    """General multilinear evaluation: ``tensor`` has one axis per argument plus the target."""
    k = len(vecs)
    if k == 0:
        return tensor
    if k == 1:
        return np.einsum("st,...s->...t", tensor, vecs[0])
    args = _LETTERS[:k]
    spec = args + "t," + ",".join("..." + a for a in args) + "->...t"
    return np.einsum(spec, tensor, *_broadcast(*vecs))


def _broadcast(*arrays):
    batch = np.broadcast_shapes(*(a.shape[:-1] for a in arrays))
    return [np.broadcast_to(a, batch + a.shape[-1:]) for a in arrays]


def matpow(mat: np.ndarray, k: int) -> np.ndarray:
    n = mat.shape[0]
    out = identity(n)
    for _ in range(k):
        out = out.dot(mat)
    return out
