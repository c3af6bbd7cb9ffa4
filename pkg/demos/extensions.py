"""Abelian extensions from 2-cocycles, and their classification."""

from homleibniz import zoo
from homleibniz.cohomology import Cochain1, CochainSpace, apply_d1, d2_matrix, solve_coboundary
from homleibniz.extensions import are_equivalent, check_extension, extension_from_cocycle, extract_cocycle
from homleibniz.homcore import HomVectorSpace
from homleibniz.lmcat import LMRepresentation
from homleibniz.qlinalg import nullspace

o = zoo.instance("l2-adjoint")
r = LMRepresentation.trivial(o, HomVectorSpace.identity(1, "v"), HomVectorSpace.identity(1, "w"))
space = CochainSpace(2, o, r)
kernel = nullspace(d2_matrix(o, r)).basis
cocycles = [space.unflatten(space.space.basis.dot(kernel[:, j])) for j in range(kernel.shape[1])]
# a cocycle that is not a coboundary, so the extension is not split
c = next(z for z in cocycles if solve_coboundary(o, r, z) is None)

e = extension_from_cocycle(o, r, c)
print("total object dims:", e.total.n, e.total.m, "| extension valid:", check_extension(e).passed)
print("cocycle recovered:", extract_cocycle(e) == c)

b = Cochain1([[1, 2]], [[-1, 3]])
e2 = extension_from_cocycle(o, r, c + apply_d1(o, r, b))
F = are_equivalent(e, e2)
print("\nshifted by D1(b), equivalent:", F is not None)
print("F0 =", F.phi0.tolist())
print("equivalent to the semidirect extension:", are_equivalent(e, extension_from_cocycle(o, r, space.zero())) is not None)
