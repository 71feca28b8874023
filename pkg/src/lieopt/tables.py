"""Machine-readable canonical tables of subalgebra representatives.

Three JSON files ship with the package:

  tables/generic.json         e-basis list for the open regimes and k = 1/2
  tables/k0_k1.json           e-basis list for k = 0 and k = 1
  tables/original_basis.json  the same lists written in the original v-basis,
                              one block per parameter regime

Each entry is a family of subalgebras: generator coefficient vectors whose
slots are a real parameter ``a``, a sign ``eps``, and an angle ``phi`` in
[0, pi] entering through cos(phi)/sin(phi).  Instances are exact rational
vectors whenever the assignment is exact (for phi that means 0, pi/2, pi);
any float in the assignment produces a float instance.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

__all__ = [
    "SlotCoeff",
    "Representative",
    "load_tables",
    "table_for",
    "EXACT_PHI",
]

# exact trig values at the three rational-compatible sample angles
EXACT_PHI = {
    Fraction(0): (Fraction(1), Fraction(0)),          # phi = 0
    Fraction(1, 2): (Fraction(0), Fraction(1)),       # phi = pi/2
    Fraction(1): (Fraction(-1), Fraction(0)),         # phi = pi
}

_COEFF = re.compile(
    r"^(?P<sign>-?)(?:(?P<rat>\d+(?:/\d+)?)\*?)?"
    r"(?:(?P<var>a|eps)\*?)?(?:(?P<trig>cos|sin)\(phi\))?$")


@dataclass(frozen=True)
class SlotCoeff:
    """One generator coefficient: constant * slot-variable * trig(phi)."""

    const: Fraction
    var: str   # "", "a" or "eps"
    trig: str  # "", "cos" or "sin"

    @classmethod
    def parse(cls, text):
        text = text.strip().replace(" ", "")
        m = _COEFF.match(text)
        if not m or not (m.group("rat") or m.group("var") or m.group("trig")):
            raise ValueError(f"bad table coefficient {text!r}")
        const = Fraction(m.group("rat")) if m.group("rat") else Fraction(1)
        if m.group("sign"):
            const = -const
        return cls(const, m.group("var") or "", m.group("trig") or "")

    def evaluate(self, assign):
        """Value under an assignment with keys a, eps, cos, sin."""
        value = self.const
        if self.var:
            value = value * assign[self.var]
        if self.trig:
            value = value * assign[self.trig]
        return value

    def __str__(self):
        parts = []
        if self.const == -1 and (self.var or self.trig):
            prefix = "-"
        elif self.const == 1 and (self.var or self.trig):
            prefix = ""
        else:
            prefix = str(self.const)
            if self.var or self.trig:
                prefix += "*"
        if self.var:
            parts.append(self.var)
        if self.trig:
            parts.append(f"{self.trig}(phi)")
        return prefix + "*".join(parts) if parts else str(self.const)


def _trig_values(phi, exact):
    if exact:
        key = Fraction(phi) if not isinstance(phi, float) else None
        if key is None or key not in EXACT_PHI:
            raise ValueError(
                "exact instances need phi in {0, 1/2, 1} (units of pi)")
        return EXACT_PHI[key]
    angle = float(phi) * math.pi if not isinstance(phi, float) else phi
    return (math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class Representative:
    """A case-labelled family of canonical subalgebras with free slots."""

    label: str
    dim: int
    rows: tuple       # tuple of generator rows, each a tuple of SlotCoeff
    case_kind: str    # "generic" | "k0_k1" | regime tag for the v-basis
    basis: str        # "e" | "v"
    notes: tuple = ()

    @property
    def free_params(self):
        names = []
        for row in self.rows:
            for c in row:
                if c.var == "a" and "a" not in names:
                    names.append("a")
                if c.var == "eps" and "eps" not in names:
                    names.append("eps")
                if c.trig and "phi" not in names:
                    names.append("phi")
        return tuple(names)

    def instance(self, assign=None, exact=True):
        """Generator vectors at a parameter assignment.

        ``assign`` may give a (rational or float), eps (+1/-1) and phi.
        An int/Fraction phi is measured in units of pi and must be 0, 1/2
        or 1 for an exact instance (the rational-compatible angles); a
        float phi is measured in radians and forces a float instance.
        Unused slots are ignored; missing ones default to a=0, eps=+1,
        phi=0.
        """
        assign = dict(assign or {})
        a = assign.get("a", 0)
        eps = int(assign.get("eps", 1))
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        phi = assign.get("phi", 0)
        if isinstance(a, float) or isinstance(phi, float):
            exact = False
        if "phi" in self.free_params:
            cos_v, sin_v = _trig_values(phi, exact)
        else:
            cos_v, sin_v = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
        if exact:
            values = {"a": Fraction(a), "eps": Fraction(eps),
                      "cos": cos_v, "sin": sin_v}
        else:
            values = {"a": float(a), "eps": float(eps),
                      "cos": float(cos_v), "sin": float(sin_v)}
        return tuple(tuple(c.evaluate(values) for c in row)
                     for row in self.rows)

    def __str__(self):
        return self.label


def _parse_entry(entry, case_kind, basis):
    rows = tuple(tuple(SlotCoeff.parse(c) for c in row)
                 for row in entry["generators"])
    return Representative(entry["label"], int(entry["dim"]), rows,
                          case_kind, basis, tuple(entry.get("notes", ())))


def _read_json(name, data_dir=None):
    if data_dir is not None:
        path = Path(data_dir) / "tables" / name
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    ref = resources.files("lieopt").joinpath(f"data/tables/{name}")
    with ref.open(encoding="utf-8") as handle:
        return json.load(handle)


@lru_cache(maxsize=4)
def load_tables(data_dir=None):
    """All bundled tables: {'generic': [...], 'k0_k1': [...],
    'original_basis': {regime: [...]}} plus per-table notes."""
    generic = _read_json("generic.json", data_dir)
    k0k1 = _read_json("k0_k1.json", data_dir)
    original = _read_json("original_basis.json", data_dir)
    out = {
        "generic": [_parse_entry(e, "generic", "e")
                    for e in generic["entries"]],
        "k0_k1": [_parse_entry(e, "k0_k1", "e") for e in k0k1["entries"]],
        "original_basis": {},
        "notes": {
            "generic": generic.get("relations", ""),
            "k0_k1": k0k1.get("relations", ""),
        },
    }
    regimes = original["regimes"]
    resolved = {}
    for tag, block in regimes.items():
        if "same_as" in block:
            continue
        resolved[tag] = [_parse_entry(e, tag, "v") for e in block["entries"]]
    for tag, block in regimes.items():
        if "same_as" in block:
            source = block["same_as"]
            resolved[tag] = [Representative(r.label, r.dim, r.rows, tag,
                                            "v", r.notes)
                             for r in resolved[source]]
    out["original_basis"] = resolved
    return out


def table_for(case, dim_sub, basis="e", data_dir=None):
    """Representatives of one dimension for a case.

    ``case`` is an AlgebraCase, a ClassifiedAlgebra, or a tag string.  With
    basis='e' the generic or k0/k1 list is returned; with basis='v' the
    matching original-basis regime block is returned.  The v output equals
    the basis-change image of the e output (verified by the test suite and
    by ``verify_optimal_system``).
    """
    tag = getattr(case, "tag", None) or getattr(
        getattr(case, "case", None), "tag", None) or str(case)
    if dim_sub not in (1, 2, 3):
        raise ValueError("dim_sub must be 1, 2 or 3")
    tables = load_tables(data_dir)
    if basis == "v":
        entries = tables["original_basis"][tag]
    elif tag in ("K0", "K1"):
        entries = tables["k0_k1"]
    else:
        entries = tables["generic"]
    return [r for r in entries if r.dim == dim_sub]
