"""Regenerate the bundled instance files and the test fixtures."""

from pathlib import Path

from homleibniz import zoo
from homleibniz.cohomology import Cochain1, Cochain2, apply_d1
from homleibniz.deform import NijenhuisPair
from homleibniz.fileformat import dumps, instance_document
from homleibniz.homcore import HomVectorSpace
from homleibniz.lmcat import LMRepresentation
from homleibniz.qlinalg import identity, zeros

ROOT = Path(__file__).resolve().parent.parent
BUNDLED = ROOT / "src" / "homleibniz" / "instances"
FIXTURES = ROOT / "tests" / "fixtures"


def write(path: Path, doc: dict) -> None:
    path.write_text(dumps(doc), encoding="utf-8")


def trivial_rep(o):
    return LMRepresentation.trivial(o, HomVectorSpace.identity(1, "v"), HomVectorSpace.identity(1, "w"))


def main() -> None:
    BUNDLED.mkdir(exist_ok=True)
    FIXTURES.mkdir(exist_ok=True)
    objects = {
        "zero.json": ("zero11", "all structure zero, dim g = dim M = 1"),
        "zero21.json": ("zero21", "all structure zero, dim g = 2, dim M = 1"),
        "l2adjoint.json": ("l2-adjoint", "e1 e1 = e2 with its adjoint bimodule and f = id"),
        "l2yau.json": ("l2-yau-adjoint", "Yau twist of e1 e1 = e2 along diag(2, 4), adjoint"),
        "l2ideal.json": ("l2-ideal", "M = span(e2) inside e1 e1 = e2, f the inclusion"),
        "r2adjoint.json": ("r2-adjoint", "Lie algebra [e1, e2] = e2, adjoint"),
        "n3yau.json": ("n3-yau-adjoint", "Yau twist of a 3-dim nilpotent Leibniz algebra, adjoint"),
    }
    for fname, (name, desc) in objects.items():
        write(BUNDLED / fname, instance_document(zoo.instance(name), name=name, description=desc))

    write(BUNDLED / "id.json", instance_document(pair=NijenhuisPair(identity(2), identity(2)), description="identity pair on a 2+2 object"))

    l2 = zoo.instance("l2-adjoint")
    structure = Cochain2(l2.algebra.product, l2.module.left, l2.module.right, l2.anchor)
    write(BUNDLED / "l2deform.json", instance_document(
        l2, cochain=structure, name="l2-deform", description="L2 adjoint deformed along its own structure (scaling)"
    ))

    z = zoo.instance("zero11")
    bad = Cochain2(zeros(1, 1, 1), zeros(1, 1, 1), zeros(1, 1, 1), zeros(1, 1))
    bad.omega[0, 0, 0] = 1
    write(BUNDLED / "zerodeform.json", instance_document(
        z, cochain=bad, name="zero-deform", description="a cocycle whose product e e = e is not Leibniz"
    ))

    rz = trivial_rep(z)
    cz = Cochain2(zeros(1, 1, 1), zeros(1, 1, 1), zeros(1, 1, 1), zeros(1, 1))
    cz.omega[0, 0, 0] = 1
    write(BUNDLED / "zeroext.json", instance_document(
        z, rep=rz, cochain=cz, name="zero-ext", description="zero object, trivial 1+1 rep, omega(e1, e1) = w1"
    ))
    ct = Cochain2(zeros(1, 1, 1), zeros(1, 1, 1), zeros(1, 1, 1), [[1]])
    write(BUNDLED / "zeroext-theta.json", instance_document(cochain=ct, description="theta(m1) = w1"))

    rl = trivial_rep(l2)
    c = Cochain2(zeros(2, 2, 1), zeros(2, 2, 1), zeros(2, 2, 1), zeros(1, 2))
    c.nu[0, 0, 0] = 1
    write(BUNDLED / "l2ext.json", instance_document(
        l2, rep=rl, cochain=c, name="l2-ext", description="L2 adjoint, trivial 1+1 rep, nu(m1, e1) = v1, a cocycle outside Im D1"
    ))
    b = Cochain1([[1, 2]], [[-1, 3]])
    write(BUNDLED / "l2ext-shifted.json", instance_document(
        cochain=c + apply_d1(l2, rl, b), description="the l2ext cocycle plus D1 of n0 = (1, 2), n1 = (-1, 3)"
    ))

    write(FIXTURES / "failing.json", instance_document(zoo.broken_anchors()[0], name="broken-anchor"))
    doc = instance_document(z)
    doc["f"] = [["1/0"]]
    write(FIXTURES / "malformed.json", doc)
    doc = instance_document(z)
    doc["g"]["product"] = [[["0", "0"]]]
    write(FIXTURES / "bad-shape.json", doc)
    doc = instance_document(z)
    doc["extra"] = 1
    write(FIXTURES / "unknown-field.json", doc)
    (FIXTURES / "not-json.json").write_text("{ \"g\": \n", encoding="utf-8")


if __name__ == "__main__":
    main()
