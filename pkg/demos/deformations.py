"""Infinitesimal deformations over Q[λ]/(λ^3) and Nijenhuis pairs."""

from homleibniz import zoo
from homleibniz.cohomology import Cochain2
from homleibniz.deform import (
    DeformationData,
    NijenhuisPair,
    check_infinitesimal_deformation,
    deformation_from_nijenhuis,
    is_nijenhuis,
    is_trivial_deformation,
)

# a cocycle whose own structure fails left Leibniz: the deformed object fails at λ^2
o = zoo.instance("zero11")
c = Cochain2([[[1]]], [[[0]]], [[[0]]], [[0]])
rep = check_infinitesimal_deformation(DeformationData.infinitesimal(o, c))
print("cocycle:", rep.cocycle_ok, "| structure:", rep.structure_ok, "| deformation:", rep.deformation_ok)
print("witness:", rep.deformation.failures()[0])

# Nijenhuis pairs on L2 give deformations that are trivial through λ^2
o = zoo.instance("l2-adjoint")
for p in [NijenhuisPair.scalar(o, 2), NijenhuisPair([[0, 0], [3, 0]], [[0, 0], [-1, 0]])]:
    d = deformation_from_nijenhuis(o, p)
    print("\nN0 =", p.n0.tolist(), "N1 =", p.n1.tolist())
    print(" ", is_nijenhuis(o, p).summary().replace("\n", "\n  "))
    print("  trivial:", is_trivial_deformation(d, p).passed)
