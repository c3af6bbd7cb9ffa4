"""Itemized pass/fail reports produced by every axiom checker."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .qlinalg import format_rational


@dataclass(frozen=True)
class Check:
    """One identity family checked over all basis tuples.

    ``witness`` holds the basis labels of the first violating tuple and
    ``defect`` the residual vector there.  Advisory checks are reported but
    never affect :attr:`CheckReport.passed`.
    """

    name: str
    passed: bool
    witness: tuple | None = None
    defect: tuple | None = None
    advisory: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.advisory:
            out["advisory"] = True
        if self.witness is not None:
            out["witness"] = list(self.witness)
            out["defect"] = [_scalar_str(d) for d in self.defect]
        if self.note:
            out["note"] = self.note
        return out


def _scalar_str(x) -> str:
    try:
        return format_rational(x)
    except (TypeError, ValueError):
        return str(x)


@dataclass
class CheckReport:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.advisory)

    def __bool__(self) -> bool:
        return self.passed

    def __iter__(self):
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def all_passed(self, *prefixes: str) -> bool:
        """True if every non-advisory check whose name starts with one of ``prefixes`` passed."""
        return all(
            c.passed
            for c in self.checks
            if not c.advisory and any(c.name.startswith(p) for p in prefixes)
        )

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.advisory]

    def first_failure(self) -> Check | None:
        fails = self.failures()
        return fails[0] if fails else None

    def add(self, check: Check) -> "CheckReport":
        self.checks.append(check)
        return self

    def merge(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for c in other.checks:
            self.checks.append(replace(c, name=prefix + c.name) if prefix else c)
        return self

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "✓" if c.passed else ("!" if c.advisory else "✗")
            line = f"  {mark} {c.name}"
            if c.witness is not None:
                defect = ", ".join(_scalar_str(d) for d in c.defect)
                line += f"  at ({', '.join(map(str, c.witness))}): defect [{defect}]"
            if c.note:
                line += f"  -- {c.note}"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.summary()


def residual_check(
    name: str,
    residual: np.ndarray,
    labels: Sequence[Sequence[str]],
    advisory: bool = False,
) -> Check:
    """Turn a residual array ``R[i1, ..., ik, t]`` into a :class:`Check`.

    ``labels[j]`` names the basis of the j-th argument slot.  The first
    multi-index (row-major) with a nonzero residual vector is the witness.
    """
    residual = np.asarray(residual, dtype=object)
    grid_shape = residual.shape[:-1]
    flat = residual.reshape(-1, residual.shape[-1]) if residual.size else None
    if flat is not None:
        for pos, row in enumerate(flat):
            if any(x != 0 for x in row):
                idx = np.unravel_index(pos, grid_shape) if grid_shape else ()
                witness = tuple(labels[j][i] for j, i in enumerate(idx))
                return Check(name, False, witness, tuple(row), advisory=advisory)
    return Check(name, True, advisory=advisory)


def checks_from(title: str, items: Iterable[Check]) -> CheckReport:
    return CheckReport(title, list(items))
