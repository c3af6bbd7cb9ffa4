"""Command-line driver: ``homleibniz <command> INSTANCE [options]``.

Exit status is 0 when every requested check passes, 1 when a mathematical
check fails, and 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import fileformat as ff
from .cohomology import (
    Cochain1,
    Cochain2,
    CochainSpace,
    check_1_cocycle,
    check_2_cocycle,
    cohomology_dim,
    d1_matrix,
    d2_matrix,
)
from .deform import (
    DeformationData,
    check_formal_deformation,
    check_infinitesimal_deformation,
    deformation_from_nijenhuis,
    is_nijenhuis,
    is_trivial_deformation,
)
from .dialg import check_left_dialgebra, check_right_dialgebra, dialgebra_from_lm
from .extensions import are_equivalent, canonical_splitting, check_extension, extension_from_cocycle, extract_cocycle
from .homcore import LEFT, ConstructionError
from .lmcat import adjoint_representation, check_lm_object, check_lm_representation, tensor_square_lm
from .qlinalg import ContainmentError, format_rational, rank
from .reports import Check, CheckReport

COMMANDS = ("check", "cohomology", "cocycle", "deform", "nijenhuis", "dialgebra", "tensor-square", "extend", "equivalent")


class UsageError(ValueError):
    pass


@dataclass
class Report:
    command: str
    digest: str
    checks: CheckReport
    numbers: dict = field(default_factory=lambda: {"dims": {}, "ranks": {}, "hDims": {}})
    data: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks.passed

    def to_dict(self) -> dict:
        return {
            "formatVersion": ff.FORMAT_VERSION,
            "command": self.command,
            "instanceDigest": self.digest,
            "checks": [c.to_dict() for c in self.checks],
            "numbers": self.numbers,
            "data": self.data,
            "passed": self.passed,
        }


def emit_report(r: Report, as_json: bool) -> str:
    if as_json:
        return json.dumps(r.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    lines = [f"{r.command}: {'PASS' if r.passed else 'FAIL'}  (instance {r.digest[:12]})"]
    for c in r.checks:
        mark = "!" if c.advisory and not c.passed else ("✓" if c.passed else "✗")
        line = f"  {mark} {c.name}"
        if c.witness is not None:
            d = c.to_dict()
            line += f"  at ({', '.join(map(str, c.witness))}): defect [{', '.join(d['defect'])}]"
        if c.note and not c.passed:
            line += f"  ({c.note})"
        lines.append(line)
    for group in ("dims", "ranks", "hDims"):
        vals = r.numbers.get(group)
        if vals:
            lines.append(f"  {group}: " + ", ".join(f"{k}={v}" for k, v in sorted(vals.items())))
    for key, val in sorted(r.data.items()):
        lines.append(f"  {key}: {json.dumps(val, ensure_ascii=False)}")
    lines.extend(f"  note: {n}" for n in r.notes)
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ helpers


def _load(args):
    inst = ff.parse_instance(args.instance)
    if inst.obj is None:
        raise ff.InstanceError("g", "instance file has no object")
    o = inst.obj
    rep = inst.rep
    if args.rep:
        extra = ff.parse_instance(args.rep, base=o)
        if extra.rep is None:
            raise ff.InstanceError("rep", f"{args.rep} has no rep section")
        rep = extra.rep
    return inst, o, rep


def _cochains(args, inst, o, rep):
    """Cochains from the instance file followed by those from --cochain files."""
    out = [inst.cochain] if inst.cochain is not None else []
    for path in args.cochain or []:
        extra = ff.parse_instance(path, base=o, base_rep=rep)
        if extra.cochain is None and not extra.cochains:
            raise ff.InstanceError("cochain", f"{path} has no cochain section")
        if extra.cochain is not None:
            out.append(extra.cochain)
        out.extend(extra.cochains)
    return out


def _rep_or_adjoint(o, rep):
    return rep if rep is not None else adjoint_representation(o, validate=False)


def _single(report: CheckReport, name: str, ok: bool, note: str = "") -> None:
    report.add(Check(name, ok, note=note))


def _dense(arr) -> list:
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 1:
        return [format_rational(x) for x in arr]
    return [_dense(x) for x in arr]


# ----------------------------------------------------------------- commands


def cmd_check(args) -> Report:
    inst, o, rep = _load(args)
    report = CheckReport("check")
    report.merge(check_lm_object(o), "object.")
    if rep is not None:
        report.merge(check_lm_representation(o, rep), "rep.")
    return Report("check", inst.digest, report)


def cmd_cohomology(args) -> Report:
    inst, o, rep = _load(args)
    r = _rep_or_adjoint(o, rep)
    compat = not args.no_alpha_compat
    k = args.degree
    if k not in (1, 2):
        raise UsageError("--degree must be 1 or 2")
    report = CheckReport("cohomology")
    report.merge(check_lm_object(o), "object.")
    out = Report("cohomology", inst.digest, report)
    dims = {f"C{j}": CochainSpace(j, o, r, compat).dim for j in (1, 2, 3)}
    d1, d2 = d1_matrix(o, r, compat), d2_matrix(o, r, compat)
    out.numbers["dims"] = dims
    out.numbers["ranks"] = {"D1": rank(d1), "D2": rank(d2)}
    square_zero = d1.shape[1] == 0 or not np.any(d2.dot(d1) != 0)
    _single(report, "D2 D1 = 0", square_zero)
    try:
        h = cohomology_dim(o, r, k, compat, d0=args.d0)
    except ContainmentError as exc:
        _single(report, f"H{k} defined", False, str(exc))
        return out
    out.numbers["dims"].update({f"Z{k}": h.z_dim, f"B{k}": h.b_dim})
    out.numbers["hDims"] = {str(k): h.h_dim}
    return out


def cmd_cocycle(args) -> Report:
    inst, o, rep = _load(args)
    cs = _cochains(args, inst, o, rep)
    if not cs:
        raise UsageError("cocycle needs a cochain (in the instance or via --cochain)")
    r = _rep_or_adjoint(o, rep)
    c = cs[-1]
    sub = check_1_cocycle(o, r, c) if isinstance(c, Cochain1) else check_2_cocycle(o, r, c)
    report = CheckReport("cocycle")
    report.merge(sub, "cocycle.")
    return Report("cocycle", inst.digest, report)


def cmd_deform(args) -> Report:
    inst, o, rep = _load(args)
    cs = [c for c in _cochains(args, inst, o, None) if isinstance(c, Cochain2)]
    if not cs:
        raise UsageError("deform needs a 2-cochain (in the instance or via --cochain)")
    report = CheckReport("deform")
    out = Report("deform", inst.digest, report)
    if args.order is None and len(cs) == 1:
        res = check_infinitesimal_deformation(DeformationData.infinitesimal(o, cs[0]))
        _single(report, "cocycle", res.cocycle_ok)
        _single(report, "structure", res.structure_ok)
        _single(report, "deformation", res.deformation_ok)
        report.merge(res.cocycle, "cocycle.")
        report.merge(res.structure, "structure.")
        report.merge(res.deformation, "deformation.")
        return out
    order = args.order if args.order is not None else len(cs)
    report.merge(check_formal_deformation(DeformationData(o, tuple(cs)), order), "formal.")
    return out


def cmd_nijenhuis(args) -> Report:
    inst, o, rep = _load(args)
    pair = inst.pair
    if args.pair:
        pair = ff.parse_instance(args.pair, base=o).pair
    if pair is None:
        raise UsageError("nijenhuis needs a pair (in the instance or via --pair)")
    report = CheckReport("nijenhuis")
    report.merge(is_nijenhuis(o, pair), "nijenhuis.")
    out = Report("nijenhuis", inst.digest, report)
    if report.passed:
        d = deformation_from_nijenhuis(o, pair)
        report.merge(is_trivial_deformation(d, pair), "trivial.")
        _single(report, "deformation", check_infinitesimal_deformation(d).deformation_ok)
        out.data["cochain"] = ff.cochain_document(d.cochain)
    return out


def cmd_dialgebra(args) -> Report:
    inst, o, rep = _load(args)
    report = CheckReport("dialgebra")
    report.merge(check_lm_object(o), "object.")
    d = dialgebra_from_lm(o, validate=False)
    checker = check_left_dialgebra if o.algebra.handedness == LEFT else check_right_dialgebra
    report.merge(checker(d), "dialgebra.")
    out = Report("dialgebra", inst.digest, report)
    out.data["dashv"] = _dense(d.dashv) if d.dim else []
    out.data["vdash"] = _dense(d.vdash) if d.dim else []
    return out


def cmd_tensor_square(args) -> Report:
    inst, o, rep = _load(args)
    report = CheckReport("tensor-square")
    ts = tensor_square_lm(o.algebra)
    report.merge(check_lm_object(ts), "object.")
    out = Report("tensor-square", inst.digest, report)
    out.numbers["dims"] = {"g": ts.n, "M": ts.m}
    return out


def _extension(o, rep, c, report: CheckReport, prefix: str):
    try:
        return extension_from_cocycle(o, rep, c)
    except ConstructionError as exc:
        _single(report, f"{prefix}constructed", False, exc.message)
        report.merge(exc.report, prefix)
        return None


def cmd_extend(args) -> Report:
    inst, o, rep = _load(args)
    if rep is None:
        raise UsageError("extend needs a representation (in the instance or via --rep)")
    cs = [c for c in _cochains(args, inst, o, rep) if isinstance(c, Cochain2)]
    if not cs:
        raise UsageError("extend needs a 2-cochain")
    report = CheckReport("extend")
    out = Report("extend", inst.digest, report)
    e = _extension(o, rep, cs[-1], report, "")
    if e is None:
        return out
    report.merge(check_extension(e), "extension.")
    _single(report, "round trip", extract_cocycle(e, canonical_splitting(e)) == cs[-1])
    out.numbers["dims"] = {"g": e.total.n, "M": e.total.m}
    return out


def cmd_equivalent(args) -> Report:
    inst, o, rep = _load(args)
    if rep is None:
        raise UsageError("equivalent needs a representation (in the instance or via --rep)")
    cs = [c for c in _cochains(args, inst, o, rep) if isinstance(c, Cochain2)]
    if len(cs) != 2:
        raise UsageError(f"equivalent needs exactly two 2-cochains, got {len(cs)}")
    report = CheckReport("equivalent")
    out = Report("equivalent", inst.digest, report)
    e1 = _extension(o, rep, cs[0], report, "first.")
    e2 = _extension(o, rep, cs[1], report, "second.")
    if e1 is None or e2 is None:
        return out
    F = are_equivalent(e1, e2, compat=not args.no_alpha_compat)
    _single(report, "equivalent", F is not None, "" if F is not None else "cocycle difference is not a coboundary")
    if F is not None:
        out.data["F0"] = _dense(F.phi0)
        out.data["F1"] = _dense(F.phi1)
    return out


_DISPATCH = {
    "check": cmd_check,
    "cohomology": cmd_cohomology,
    "cocycle": cmd_cocycle,
    "deform": cmd_deform,
    "nijenhuis": cmd_nijenhuis,
    "dialgebra": cmd_dialgebra,
    "tensor-square": cmd_tensor_square,
    "extend": cmd_extend,
    "equivalent": cmd_equivalent,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="homleibniz",
        description="Exact checks and cohomology for Hom-Leibniz algebras in the Loday-Pirashvili category.",
        epilog="Instances may be paths or names of bundled files: " + ", ".join(ff.bundled_names()),
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--degree", type=int, default=2, help="cohomology degree (1 or 2)")
    p.add_argument("--no-alpha-compat", action="store_true", help="use raw cochains instead of twist-compatible ones")
    p.add_argument("--d0", choices=("zero", "inner"), default="zero", help="degree-0 differential for H1")
    p.add_argument("--order", type=int, help="truncation order for formal deformations")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--rep", metavar="FILE", help="file with a rep section")
    p.add_argument("--cochain", metavar="FILE", action="append", help="file with a cochain section (repeatable)")
    p.add_argument("--pair", metavar="FILE", help="file with a pair section")
    return p


def run(argv=None) -> tuple[int, str]:
    """Run a command and return ``(exit status, report text)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    report = _DISPATCH[args.command](args)
    return (0 if report.passed else 1), emit_report(report, args.json)


def main(argv=None) -> int:
    try:
        status, text = run(argv)
    except (ff.InstanceError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
