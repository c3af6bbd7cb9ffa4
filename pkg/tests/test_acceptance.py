"""The nine acceptance criteria, each run exactly as stated.

Every criterion prints one ``criterion N: PASS|FAIL ...`` line (also
collected into the pytest terminal summary).  Run standalone with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homleibniz import zoo  # noqa: E402
from homleibniz.cohomology import (  # noqa: E402
    Cochain2,
    CochainSpace,
    apply_d1,
    apply_d2,
    check_1_cocycle,
    check_2_cocycle,
    cohomology_dim,
    d1_matrix,
    d2_matrix,
    raw_dimension,
    solve_coboundary,
)
from homleibniz.deform import (  # noqa: E402
    DeformationData,
    NijenhuisPair,
    check_infinitesimal_deformation,
    deformation_from_nijenhuis,
    is_trivial_deformation,
)
from homleibniz.dialg import (  # noqa: E402
    Dialgebra,
    check_admissible,
    check_left_dialgebra,
    dialgebra_from_lm,
    leibniz_from_admissible,
    symmetric_lm_products,
)
from homleibniz.extensions import (  # noqa: E402
    Splitting,
    are_equivalent,
    canonical_splitting,
    extension_from_cocycle,
    extract_cocycle,
)
from homleibniz.homcore import (  # noqa: E402
    HomVectorSpace,
    check_hom_leibniz,
    check_left_hom_leibniz,
    check_right_hom_leibniz,
    semidirect_product,
)
from homleibniz.lmcat import (  # noqa: E402
    LMRepresentation,
    adjoint_representation,
    check_lm_morphism,
    check_lm_object,
    check_symmetric_lm_object,
    check_via_semidirect_hom,
    is_equivariant,
    lm_semidirect,
    tensor_square_lm,
)
from homleibniz.qlinalg import is_zero, nullspace, zeros  # noqa: E402
from helpers import BUNDLED_RUNS, random_cochain  # noqa: E402
from oracles import h2_oracle, lambda_coefficients  # noqa: E402

RESULTS: dict[int, str] = {}


def record(number: int, failures: list[str], summary: str) -> None:
    verdict = "PASS" if not failures else "FAIL"
    detail = summary if not failures else f"{summary}; {len(failures)} failing: " + " | ".join(failures[:4])
    line = f"criterion {number}: {verdict} {detail}"
    RESULTS[number] = line
    print(line)
    assert not failures, line


def adjoint(o, valid=True):
    return adjoint_representation(o, validate=valid)


def trivial_rep(o):
    return LMRepresentation.trivial(o, HomVectorSpace.identity(1, "v"), HomVectorSpace.identity(1, "w"))


# ------------------------------------------------------------------ 1


CRITERION1_ZOO = ["zero11", "zero21", "l2-adjoint", "l2-yau-adjoint", "l2-tensor-square"]


def test_criterion_1_complex_property():
    start = time.perf_counter()
    failures = []
    cases = [(n, zoo.instance(n)) for n in CRITERION1_ZOO]
    cases += [(f"random seed {s}", zoo.random_yau_instance(s)) for s in range(50)]
    for label, o in cases:
        r = adjoint(o, valid=False)
        if not is_zero(d2_matrix(o, r).dot(d1_matrix(o, r))):
            failures.append(f"{label}: D2 D1 != 0")
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        failures.append(f"runtime {elapsed:.1f}s >= 10s")
    record(1, failures, f"D2 D1 = 0 on {len(cases) - len(failures)}/{len(cases)} instances in {elapsed:.1f}s")


# ------------------------------------------------------------------ 2


def test_criterion_2_counting():
    failures = []
    objs = [(n, zoo.instance(n)) for n in zoo.names()] + [(f"seed {s}", zoo.random_yau_instance(s)) for s in range(5)]
    for label, o in objs:
        for rname, r in (("adjoint", adjoint(o, valid=False)), ("trivial", trivial_rep(o))):
            n, m, v, w = o.n, o.m, r.v, r.w
            c2 = CochainSpace(2, o, r, compat=False).dim
            c3 = CochainSpace(3, o, r, compat=False).dim
            if c2 != n * n * w + 2 * n * m * v + m * w or c2 != raw_dimension(2, n, m, v, w):
                failures.append(f"{label}/{rname}: dim C2 = {c2}")
            if c3 != n**3 * w + 3 * n * n * m * v + 2 * n * m * w or c3 != raw_dimension(3, n, m, v, w):
                failures.append(f"{label}/{rname}: dim C3 = {c3}")
    for name, expected in (("zero11", 4), ("zero21", 14)):
        o = zoo.instance(name)
        r = adjoint(o)
        h = cohomology_dim(o, r, 2).h_dim
        oracle = h2_oracle(o, r)[2]
        if not h == oracle == expected:
            failures.append(f"{name}: H2 library {h}, oracle {oracle}, expected {expected}")
    record(2, failures, f"cochain dimensions on {len(objs)} objects x 2 reps; H2 = 4 and 14 (oracle agrees)")


# ------------------------------------------------------------------ 3


def test_criterion_3_constructions_preserve_axioms():
    failures = []
    for name in zoo.names():
        o = zoo.instance(name)
        a = o.algebra
        if zoo.expected_valid(name):
            if not check_hom_leibniz(semidirect_product(a, o.module)).passed:
                failures.append(f"semidirect product on {name}")
            for rname, r in (("adjoint", adjoint(o)), ("trivial", trivial_rep(o))):
                if not check_lm_object(lm_semidirect(o, r)).passed:
                    failures.append(f"LM semidirect product ({rname}) on {name}")
            d = dialgebra_from_lm(o)
            if not check_left_dialgebra(d).passed:
                failures.append(f"dialgebra of LM object on {name}")
            if check_admissible(d).passed:
                left, right = leibniz_from_admissible(d)
                if not (check_left_hom_leibniz(left).passed and check_right_hom_leibniz(right).passed):
                    failures.append(f"products of admissible dialgebra on {name}")
            if check_symmetric_lm_object(o).passed:
                left, right = symmetric_lm_products(o)
                if not (check_left_hom_leibniz(left).passed and check_right_hom_leibniz(right).passed):
                    failures.append(f"symmetric products on {name}")
        # admissible-dialgebra products on the structure with |- the product and -| zero
        adm = Dialgebra(a.space, zeros(a.dim, a.dim, a.dim), a.product)
        if check_admissible(adm).passed:
            left, right = leibniz_from_admissible(adm)
            if not (check_left_hom_leibniz(left).passed and check_right_hom_leibniz(right).passed):
                failures.append(f"products of admissible dialgebra (|- = product) on {name}")
        ts = check_lm_object(tensor_square_lm(a))
        if not ts.passed:
            item = ts.failures()[0]
            failures.append(f"tensor square on {name}: {item.name} at {item.witness}")
    record(3, failures, f"constructor outputs checked on {len(zoo.names())} zoo instances")


# ------------------------------------------------------------------ 4


def test_criterion_4_semidirect_characterization():
    failures = []
    cases = [(n, zoo.instance(n)) for n in zoo.names()]
    cases += [(f"broken anchor {k}", o) for k, o in enumerate(zoo.broken_anchors())]
    for label, o in cases:
        direct = is_equivariant(check_lm_object(o))
        via = check_via_semidirect_hom(o).passed
        if direct != via:
            failures.append(f"{label}: direct {direct}, semidirect {via}")
        if label.startswith("broken") and (direct or via):
            failures.append(f"{label}: not detected")
    record(4, failures, f"agreement on {len(cases)} instances including 2 broken anchors")


# ------------------------------------------------------------------ 5


def _cocycle_samples(o, r, k, count):
    """Random cochains mixed with kernel elements, so both verdicts occur."""
    raw = CochainSpace(k, o, r, compat=False)
    compat = CochainSpace(k, o, r)
    d = d1_matrix(o, r) if k == 1 else d2_matrix(o, r)
    kernel = nullspace(d).basis
    out = []
    for seed in range(count):
        kind = seed % 3
        if kind == 0:
            out.append(random_cochain(raw, seed, -1, 1))
        elif kind == 1:
            out.append(random_cochain(compat, seed, -2, 2))
        else:
            vec = kernel.dot([((seed * 7 + j) % 5) - 2 for j in range(kernel.shape[1])]) if kernel.shape[1] else None
            out.append(compat.unflatten(compat.space.basis.dot(vec)) if vec is not None else compat.zero())
    return out


def test_criterion_5_cocycle_consistency():
    failures = []
    counts = {True: 0, False: 0}
    names = [n for n in zoo.names() if zoo.expected_valid(n)]
    for name in names:
        o = zoo.instance(name)
        r = adjoint(o)
        for b in _cocycle_samples(o, r, 1, 100):
            ok = check_1_cocycle(o, r, b).passed
            counts[ok] += 1
            if ok != apply_d1(o, r, b).is_zero():
                failures.append(f"{name}: 1-cocycle verdict {ok}")
        for c in _cocycle_samples(o, r, 2, 100):
            ok = check_2_cocycle(o, r, c).passed
            counts[ok] += 1
            if ok != apply_d2(o, r, c).is_zero():
                failures.append(f"{name}: 2-cocycle verdict {ok}")
    record(5, failures, f"{len(names)} instances x 100 cochains per degree ({counts[True]} cocycles, {counts[False]} not)")


# ------------------------------------------------------------------ 6


def _confirm_witnesses(o, c, rep, failures, label):
    labels = o.algebra.labels, o.module.labels
    for item in rep.deformation.failures():
        index = tuple(labels[0].index(x) if x in labels[0] else labels[1].index(x) for x in item.witness)
        oracle = lambda_coefficients(o, c, item.name, index)
        lib = [[p[k] for p in item.defect] for k in range(3)]
        if lib != [list(v) for v in oracle]:
            failures.append(f"{label}: witness {item.name} {item.witness} coefficients differ")
        elif not any(any(x != 0 for x in v) for v in oracle[1:]):
            failures.append(f"{label}: witness {item.name} has no lambda part")


def test_criterion_6_deformation_biconditional():
    failures = []
    counts = {"random": 0, "coboundary": 0, "crafted": 0, "witnesses": 0}
    for name in [n for n in zoo.names() if zoo.expected_valid(n)]:
        o = zoo.instance(name)
        r = adjoint(o)
        space1, space2 = CochainSpace(1, o, r), CochainSpace(2, o, r)
        samples = [("random", random_cochain(space2, s, -1, 1)) for s in range(6)]
        samples += [("coboundary", apply_d1(o, r, random_cochain(space1, s))) for s in range(3)]
        for kind, c in samples:
            rep = check_infinitesimal_deformation(DeformationData.infinitesimal(o, c))
            counts[kind] += 1
            counts["witnesses"] += len(rep.deformation.failures())
            if rep.deformation_ok != (rep.cocycle_ok and rep.structure_ok):
                failures.append(f"{name} {kind}: {rep.deformation_ok} vs {rep.cocycle_ok} and {rep.structure_ok}")
            _confirm_witnesses(o, c, rep, failures, f"{name} {kind}")
    o = zoo.instance("zero11")
    crafted = Cochain2([[[1]]], [[[0]]], [[[0]]], [[0]])
    rep = check_infinitesimal_deformation(DeformationData.infinitesimal(o, crafted))
    counts["crafted"] += 1
    if not (rep.cocycle_ok and not rep.structure_ok and not rep.deformation_ok):
        failures.append("crafted cocycle: expected cocycle, non-structure, non-deformation")
    _confirm_witnesses(o, crafted, rep, failures, "crafted")
    summary = ", ".join(f"{v} {k}" for k, v in counts.items())
    record(6, failures, f"biconditional and witnesses confirmed by interpolation ({summary})")


# ------------------------------------------------------------------ 7


def test_criterion_7_nijenhuis_trivial():
    failures = []
    o = zoo.instance("l2-adjoint")
    r = adjoint(o)
    pairs = [("(0,0)", NijenhuisPair.scalar(o, 0)), ("(id,id)", NijenhuisPair.scalar(o, 1))]
    pairs += [(f"({c} id,{c} id)", NijenhuisPair.scalar(o, c)) for c in (2, -3)]
    pairs += [(f"random {s}", zoo.random_nijenhuis_pair(s)) for s in range(20)]
    for label, p in pairs:
        d = deformation_from_nijenhuis(o, p)
        if not d.cochain == apply_d1(o, r, p.as_cochain()):
            failures.append(f"{label}: cochain differs from D1(N)")
        report = is_trivial_deformation(d, p, order=2)
        if not report.passed:
            failures.append(f"{label}: {report.failures()[0].name}")
    record(7, failures, f"{len(pairs)} Nijenhuis pairs: cochain = D1(N) and trivial mod λ^3")


# ------------------------------------------------------------------ 8


def _z2(o, r):
    space = CochainSpace(2, o, r)
    k = nullspace(d2_matrix(o, r)).basis
    return [space.unflatten(space.space.basis.dot(k[:, j])) for j in range(k.shape[1])]


def test_criterion_8_extension_round_trips():
    failures = []
    checked = 0
    for name, rname in (("zero11", "trivial"), ("zero21", "trivial"), ("l2-adjoint", "trivial"),
                        ("l2-adjoint", "adjoint"), ("r2-adjoint", "adjoint")):
        o = zoo.instance(name)
        r = trivial_rep(o) if rname == "trivial" else adjoint(o)
        for c in _z2(o, r)[:5] + [CochainSpace(2, o, r).zero()]:
            e = extension_from_cocycle(o, r, c)
            s = canonical_splitting(e)
            if not extract_cocycle(e, s) == c:
                failures.append(f"{name}/{rname}: round trip")
            b = random_cochain(CochainSpace(1, o, r, compat=False), checked)
            s2 = Splitting(s.sigma0 + e.i0.dot(b.n0), s.sigma1 + e.i1.dot(b.n1))
            if not extract_cocycle(e, s2) - extract_cocycle(e, s) == apply_d1(o, r, b):
                failures.append(f"{name}/{rname}: perturbed splitting")
            checked += 1
    # equivalence on the zero structure: positive and negative
    o = zoo.instance("zero11")
    r = trivial_rep(o)
    zs = _z2(o, r)
    for c1 in zs + [CochainSpace(2, o, r).zero()]:
        for c2 in zs + [CochainSpace(2, o, r).zero()]:
            e1, e2 = extension_from_cocycle(o, r, c1), extension_from_cocycle(o, r, c2)
            F = are_equivalent(e1, e2)
            coboundary = solve_coboundary(o, r, c1 - c2) is not None
            if (F is not None) != coboundary:
                failures.append("zero11: equivalence verdict differs from coboundary test")
            if F is not None and not check_lm_morphism(e1.total, e2.total, F).passed:
                failures.append("zero11: equivalence morphism fails")
            checked += 1
    # a positive case with a non-trivial coboundary
    o = zoo.instance("l2-adjoint")
    r = trivial_rep(o)
    c = _z2(o, r)[0]
    b = random_cochain(CochainSpace(1, o, r), 5)
    if are_equivalent(extension_from_cocycle(o, r, c), extension_from_cocycle(o, r, c + apply_d1(o, r, b))) is None:
        failures.append("l2-adjoint: shifted cocycle not recognized as equivalent")
    record(8, failures, f"{checked} round trips and equivalence decisions")


# ------------------------------------------------------------------ 9


FIXTURES = Path(__file__).parent / "fixtures"


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "homleibniz", *map(str, argv)], capture_output=True)


def test_criterion_9_cli_determinism():
    failures = []
    for argv, status in BUNDLED_RUNS:
        a, b = _cli(*argv, "--json"), _cli(*argv, "--json")
        if a.stdout != b.stdout or not a.stdout:
            failures.append(f"{' '.join(argv)}: reports differ")
        if a.returncode != status or b.returncode != status:
            failures.append(f"{' '.join(argv)}: exit {a.returncode}, expected {status}")
    for fixture, status in (("failing.json", 1), ("malformed.json", 2), ("bad-shape.json", 2),
                            ("unknown-field.json", 2), ("not-json.json", 2)):
        proc = _cli("check", FIXTURES / fixture)
        if proc.returncode != status:
            failures.append(f"{fixture}: exit {proc.returncode}, expected {status}")
    if _cli("check", "l2adjoint.json").returncode != 0:
        failures.append("passing instance: nonzero exit")
    record(9, failures, f"{len(BUNDLED_RUNS)} bundled runs byte-identical; exit codes 0/1/2 on fixtures")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
