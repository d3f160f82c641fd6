"""Canonical serialization of model elements, tables, and reports.

All JSON is emitted with sorted keys and fixed separators, rationals as
{"num": "...", "den": "..."} decimal strings, exterior monomials as sorted
index arrays, and model vectors as entry lists sorted by (u_power, indices).
Byte-identical output across runs and across worker-pool sizes is a
contract, not an accident: everything routed through canonical_dumps.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .tensors import AVector


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def frac_json(c: Fraction) -> dict:
    return {"num": str(c.numerator), "den": str(c.denominator)}


def frac_from_json(doc: dict) -> Fraction:
    return Fraction(int(doc["num"]), int(doc["den"]))


def avector_json(v: AVector) -> list[dict]:
    out = []
    for (t, theta), c in v.sorted_terms():
        entry = {"u": t, "theta": list(theta)}
        entry.update(frac_json(c))
        out.append(entry)
    return out


def avector_from_json(doc: list[dict]) -> AVector:
    return AVector(
        {(e["u"], tuple(e["theta"])): frac_from_json(e) for e in doc}
    )


def avector_text(v: AVector) -> str:
    if not v:
        return "0"
    pieces = []
    for (t, theta), c in v.sorted_terms():
        factors = []
        if c != 1 or (t == 0 and not theta):
            factors.append(str(c))
        if t == 1:
            factors.append("u")
        elif t != 0:
            factors.append(f"u^{t}")
        if theta:
            factors.append("^".join(f"v{i}" for i in theta))
        pieces.append(" ".join(factors))
    return " + ".join(pieces)


def mu_table_json(table: dict) -> dict:
    return {
        "n": table["n"],
        "d": table["d"],
        "potential": table["potential"],
        "entries": [
            {
                "k": e["k"],
                "inputs": [list(m) for m in e["inputs"]],
                "output": avector_json(e["output"]),
            }
            for e in table["entries"]
        ],
    }


def mu_table_from_json(doc: dict) -> dict:
    return {
        "n": doc["n"],
        "d": doc["d"],
        "potential": doc["potential"],
        "entries": [
            {
                "k": e["k"],
                "inputs": [list(m) for m in e["inputs"]],
                "output": avector_from_json(e["output"]),
            }
            for e in doc["entries"]
        ],
    }


def _input_text(mono: list[int]) -> str:
    if not mono:
        return "1"
    return "^".join(f"v{i}" for i in mono)


def mu_table_text(table: dict) -> str:
    lines = [
        f"potential {table['potential']}  (n={table['n']}, d={table['d']})",
        f"nonzero products: {len(table['entries'])}",
    ]
    for e in table["entries"]:
        args = ", ".join(_input_text(m) for m in e["inputs"])
        lines.append(f"mu^{e['k']}({args}) = {avector_text(e['output'])}")
    return "\n".join(lines) + "\n"


def report_text(reports: list[dict]) -> str:
    lines = []
    for rep in reports:
        lines.append(f"[{rep['status']}] {rep['check_name']}")
        for ident in rep.get("identities", []):
            lines.append(f"    [{ident['status']}] {ident['identity']}")
            for w in ident.get("witnesses", []):
                lines.append(f"        witness: {w}")
        for w in rep.get("witnesses", []):
            lines.append(f"    witness: {w}")
        if rep.get("counterexample"):
            lines.append(f"    counterexample: {rep['counterexample']}")
        if rep.get("notes"):
            lines.append(f"    note: {rep['notes']}")
    return "\n".join(lines) + "\n"


def sod_text(desc: dict) -> str:
    if "blocks" not in desc:
        return f"i = {desc['i']}, k = {desc['k']}\n"

    def one(b: dict) -> str:
        kind = b["kind"]
        if kind == "lefschetz":
            return f"A_{b['index']}({b['twist']})"
        if kind == "dual":
            return f"B_{b['index']}({b['twist']})"
        if "twist" in b:
            return f"{kind}({b['twist']})"
        return kind

    lines = [
        f"case {desc['case']}  (wall mu = {desc['wall_mu']})",
        "blocks: " + " | ".join(one(b) for b in desc["blocks"]),
    ]
    if desc.get("notes"):
        lines.append(f"note: {desc['notes']}")
    return "\n".join(lines) + "\n"
