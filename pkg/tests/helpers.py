"""Seeded generators shared by the test modules."""

import random

from homleibniz.cohomology import CochainSpace


def random_cochain(space: CochainSpace, seed: int, lo: int = -3, hi: int = 3):
    """Integer combination of the space's basis cochains."""
    rng = random.Random(seed)
    c = space.zero()
    for b in space.basis_cochains():
        c = c + b.scale(rng.randint(lo, hi))
    return c


# (argv, expected exit status) covering every bundled instance file
BUNDLED_RUNS = [
    (["check", "zero.json"], 0),
    (["cohomology", "zero.json", "--degree", "2"], 0),
    (["cohomology", "zero.json", "--degree", "1", "--d0", "inner"], 0),
    (["check", "zero21.json"], 0),
    (["cohomology", "zero21.json"], 0),
    (["check", "l2adjoint.json"], 0),
    (["cohomology", "l2adjoint.json"], 0),
    (["dialgebra", "l2adjoint.json"], 0),
    (["tensor-square", "l2adjoint.json"], 1),
    (["nijenhuis", "l2adjoint.json", "--pair", "id.json"], 0),
    (["check", "l2yau.json"], 0),
    (["cohomology", "l2yau.json"], 0),
    (["cohomology", "l2yau.json", "--no-alpha-compat"], 0),
    (["dialgebra", "l2yau.json"], 0),
    (["check", "l2ideal.json"], 0),
    (["cohomology", "l2ideal.json"], 0),
    (["check", "r2adjoint.json"], 0),
    (["cohomology", "r2adjoint.json"], 0),
    (["check", "n3yau.json"], 0),
    (["cohomology", "n3yau.json"], 0),
    (["deform", "l2deform.json"], 0),
    (["cocycle", "l2deform.json"], 0),
    (["deform", "zerodeform.json"], 1),
    (["extend", "zeroext.json"], 0),
    (["equivalent", "zeroext.json", "--cochain", "zeroext-theta.json"], 1),
    (["extend", "l2ext.json"], 0),
    (["equivalent", "l2ext.json", "--cochain", "l2ext-shifted.json"], 0),
]
