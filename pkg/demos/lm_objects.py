"""LM objects: checking axioms, reading witnesses, and the semidirect test."""

from homleibniz import zoo
from homleibniz.dialg import dialgebra_from_lm, symmetric_lm_products
from homleibniz.lmcat import check_lm_object, check_via_semidirect_hom, is_equivariant, tensor_square_lm

o = zoo.instance("l2-adjoint")
print(check_lm_object(o).summary())

# an anchor that is not equivariant: both tests reject it, with a witness
bad = zoo.broken_anchors()[0]
report = check_lm_object(bad)
print("\nbroken anchor equivariant:", is_equivariant(report), "| via semidirect:", check_via_semidirect_hom(bad).passed)
print("first failure:", report.failures()[0])

# dialgebra products read off an LM object
d = dialgebra_from_lm(zoo.instance("l2-yau-adjoint"))
print("\n-| on e1, e1:", d.dashv[0, 0].tolist(), "  |- on e1, e1:", d.vdash[0, 0].tolist())
left, right = symmetric_lm_products(zoo.instance("r2-adjoint"))
print("symmetric products on r2: left", left.product[0, 1].tolist(), "right", right.product[0, 1].tolist())

# the tensor square satisfies the anchor identities but not module axiom L2
ts = check_lm_object(tensor_square_lm(zoo.l2()))
print("\ntensor square anchors ok:", ts.all_passed("cm01", "cm02"), "| L2 witness:", ts["bimodule.L2"].witness)
