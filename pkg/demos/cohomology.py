"""Cochain complexes with adjoint coefficients and second cohomology."""

from homleibniz import zoo
from homleibniz.cohomology import CochainSpace, apply_d1, cohomology_dim, d1_matrix, d2_matrix
from homleibniz.deform import is_rigid
from homleibniz.lmcat import adjoint_representation
from homleibniz.qlinalg import is_zero

for name in ["zero11", "zero21", "l2-adjoint", "l2-yau-adjoint", "r2-adjoint", "n3-yau-adjoint"]:
    o = zoo.instance(name)
    r = adjoint_representation(o)
    c2 = CochainSpace(2, o, r)
    ok = is_zero(d2_matrix(o, r).dot(d1_matrix(o, r)))
    z, b, h, _ = cohomology_dim(o, r, 2)
    raw = cohomology_dim(o, r, 2, compat=False)
    print(f"{name:16} dim C2 = {c2.dim:3}  D2 D1 = 0: {ok}  (Z, B, H) = ({z}, {b}, {h})  raw H = {raw.h_dim}")

# a coboundary, written out piece by piece
o = zoo.instance("l2-adjoint")
r = adjoint_representation(o)
n = CochainSpace(1, o, r).basis_cochains()[0]
print("\nD1 of", n.n0.tolist(), n.n1.tolist(), "has omega", apply_d1(o, r, n).omega.tolist())

print("\n" + is_rigid(zoo.instance("l2-yau-adjoint")).summary())
