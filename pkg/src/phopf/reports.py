"""Structured check reports: per-axiom verdicts with witness tuples.

A failed axiom records every witness in basis-scan order together with the
two evaluated sides, so negative results are reproducible data rather than
booleans.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def render_vec(v, names=None):
    """Render a dict vector against basis names, deterministically ordered."""
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        c = v[k]
        name = names[k] if names and k < len(names) else "e%d" % k
        cs = str(c)
        if cs == "1":
            parts.append(name)
        elif cs == "-1":
            parts.append("-" + name)
        else:
            parts.append("%s*%s" % (cs, name))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def render_scalar(c):
    return str(c)


@dataclass
class Witness:
    where: tuple
    left: str
    right: str

    def to_json(self):
        return {"where": list(self.where), "left": self.left, "right": self.right}


@dataclass
class AxiomCheck:
    axiom: str
    ok: bool
    witnesses: list = field(default_factory=list)
    note: str = ""

    def to_json(self):
        out = {"axiom": self.axiom, "ok": self.ok}
        if self.witnesses:
            out["witnesses"] = [w.to_json() for w in self.witnesses]
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)
    flags: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def first_failure(self):
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def check(self, axiom):
        for c in self.checks:
            if c.axiom == axiom:
                return c
        return None

    def add(self, axiom, witnesses, note=""):
        self.checks.append(AxiomCheck(axiom, not witnesses, list(witnesses), note))
        return self.checks[-1]

    def merge(self, other):
        self.checks.extend(other.checks)
        for k, v in other.flags.items():
            self.flags.setdefault(k, v)
        for k, v in other.dims.items():
            self.dims.setdefault(k, v)
        return self

    def to_json(self):
        return {
            "schema": "phopf-report/1",
            "subject": self.subject,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "flags": dict(sorted(self.flags.items())),
            "dims": dict(sorted(self.dims.items())),
        }

    def render_text(self):
        lines = ["subject: %s" % self.subject]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            line = "  [%s] %s" % (mark, c.axiom)
            if c.note:
                line += "  (%s)" % c.note
            lines.append(line)
            for w in c.witnesses:
                lines.append("         witness %s: %s != %s" % (tuple(w.where), w.left, w.right))
        if self.flags:
            lines.append("  flags: " + ", ".join("%s=%s" % kv for kv in sorted(self.flags.items())))
        if self.dims:
            lines.append("  dims: " + ", ".join("%s=%s" % kv for kv in sorted(self.dims.items())))
        lines.append("result: %s" % ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)

    def render_json(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=False)
