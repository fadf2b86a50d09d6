"""Validation reports and certificates.

Validators never raise on axiom violations; they collect every failed
instance into a ValidationReport so callers (and the CLI) can show all of
them at once.  Certificates are the result of constructive comparisons
(round trips, bijections) and carry the first mismatch when they fail.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance.

    rule
        Stable identifier of the violated law.  Operadic structure equations
        use their item number, e.g. ``"(15)"``; other validators use short
        descriptive ids such as ``"d_i d_j = d_{j-1} d_i"``.
    where
        Witness cells, as a tuple of (label, index) style entries.
    detail
        Free-form human explanation.
    """

    rule: str
    where: tuple = ()
    detail: str = ""

    def render(self) -> str:
        loc = ", ".join(f"{k}={v}" for k, v in self.where) if self.where else "-"
        msg = f"{self.rule} violated at {loc}"
        if self.detail:
            msg += f": {self.detail}"
        return msg


@dataclass
class ValidationReport:
    """Outcome of a validator run over one structure."""

    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, rule: str, where: tuple = (), detail: str = "") -> None:
        self.violations.append(Violation(rule, where, detail))

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  {v.render()}" for v in self.violations]
        return "\n".join(lines)


@dataclass
class Certificate:
    """Result of a constructive comparison (iso/bijection/round trip)."""

    subject: str
    ok: bool = True
    details: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.details.append(message)

    def note(self, message: str) -> None:
        self.details.append(message)

    def summary(self) -> str:
        status = "certified" if self.ok else "FAILED"
        lines = [f"{self.subject}: {status}"]
        lines += [f"  {d}" for d in self.details]
        return "\n".join(lines)


@dataclass
class BijectionCertificate:
    """Certificate that two independently enumerated finite sets match.

    ``left`` and ``right`` are the two counts; the comparison map and its
    inverse are checked by whoever issues the certificate, which records
    any mismatch through :meth:`fail`.
    """

    subject: str
    left: int
    right: int
    ok: bool = True
    details: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.details.append(message)

    def note(self, message: str) -> None:
        self.details.append(message)

    def summary(self) -> str:
        status = "certified" if self.ok else "FAILED"
        lines = [f"{self.subject}: {status} ({self.left} <-> {self.right})"]
        lines += [f"  {d}" for d in self.details]
        return "\n".join(lines)


def merge(subject: str, *reports: ValidationReport) -> ValidationReport:
    out = ValidationReport(subject)
    for r in reports:
        out.violations.extend(r.violations)
    return out
