"""Scaled comparison tables in the published layout (text, CSV, JSON)."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import List, Sequence

from .catalog import ProtocolInstance
from .attributes import Probability
from .pareto import MafiaBound, SummaryRow, pareto_pipeline

_LOG2_SNAP = 1e-9


def scale_security_log2(p: Probability) -> float:
    """Integer exponent k with 2^k = smallest power of two >= p (p > 0)."""
    l = p.log2
    if math.isinf(l):
        return float("-inf")
    nearest = round(l)
    if abs(l - nearest) < _LOG2_SNAP:
        return float(nearest)
    return float(math.ceil(l))


def scale_security(p: Probability) -> Probability:
    """2^ceil(log2 p); p = 0 passes through unchanged (flagged by caller)."""
    k = scale_security_log2(p)
    return Probability(k) if math.isfinite(k) else Probability(float("-inf"))


def scale_memory(bits: int) -> int:
    """Kilobits, floored."""
    return bits // 1024


def _pow2_label(p: Probability) -> str:
    k = scale_security_log2(p)
    if math.isinf(k):
        return "0"
    return f"2^{int(k)}"


@dataclass(frozen=True)
class ScaledRow:
    """One comparison-table row: representative instance plus group total."""

    instance_id: str
    n: int
    p_m: str           # scaled, e.g. "2^-16"
    p_d: str
    p_t: str
    b: bool
    c: int
    m_kb: int
    f: bool            # final slow phase
    total: int

    def as_dict(self) -> dict:
        return {
            "id": self.instance_id, "n": self.n,
            "p_m": self.p_m, "p_d": self.p_d, "p_t": self.p_t,
            "b": self.b, "c": self.c, "m_kb": self.m_kb, "f": self.f,
            "total": self.total,
        }


def scaled_row(row: SummaryRow) -> ScaledRow:
    inst = row.representative
    v = inst.vector
    return ScaledRow(
        instance_id=inst.id, n=inst.n,
        p_m=_pow2_label(v.p_m), p_d=_pow2_label(v.p_d), p_t=_pow2_label(v.p_t),
        b=v.b, c=v.c, m_kb=scale_memory(v.m), f=v.s,
        total=row.total,
    )


def reconstructed_protocols() -> set:
    """Protocols whose security formulas are cited-reference plug-ins.

    Their table rows are reproductions of reconstructed evaluators, not of
    formulas printed in full in the source tables, and are flagged in the
    emitted reports.
    """
    from .catalog import DESCRIPTORS
    flagged = set()
    for pid, d in DESCRIPTORS.items():
        if any(tag == "cited-reference" for tag in d.provenance.values()):
            flagged.add(pid)
    return flagged


def comparison_blocks(instances: Sequence[ProtocolInstance],
                      bounds: Sequence[MafiaBound],
                      memory_tolerance_bits=None) -> List[dict]:
    """One block per bound: scaled representative rows in table layout."""
    kwargs = {}
    if memory_tolerance_bits is not None:
        kwargs["memory_tolerance_bits"] = memory_tolerance_bits
    blocks = []
    for bound in bounds:
        _, solution, rows = pareto_pipeline(instances, bound, **kwargs)
        blocks.append({
            "y": bound.label(),
            "rows": [scaled_row(r) for r in rows],
            "member_ids": solution.ids(),
        })
    return blocks


_COLS = ["instance", "n", "p_m", "p_d", "p_t", "b", "c", "m", "f", "total"]


def emit_table(instances: Sequence[ProtocolInstance],
               bounds: Sequence[MafiaBound], fmt: str = "text",
               memory_tolerance_bits=None) -> str:
    """The nondominated-instances table for each bound, in the given format."""
    if not bounds:
        raise ValueError("need at least one mafia bound")
    if fmt not in ("text", "csv", "json"):
        raise ValueError(f"unknown table format: {fmt!r}")
    blocks = comparison_blocks(instances, bounds, memory_tolerance_bits)
    warned = reconstructed_protocols()

    if fmt == "json":
        payload = [{"y": b["y"],
                    "rows": [dict(r.as_dict(),
                                  provenance_warning=_protocol_of(r) in warned)
                             for r in b["rows"]]}
                   for b in blocks]
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"

    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["y"] + _COLS + ["provenance_warning"])
        for b in blocks:
            for r in b["rows"]:
                w.writerow([b["y"], r.instance_id, r.n, r.p_m, r.p_d, r.p_t,
                            str(r.b).lower(), r.c, f"{r.m_kb}Kb",
                            str(r.f).lower(), r.total,
                            str(_protocol_of(r) in warned).lower()])
        return buf.getvalue()

    # text
    lines = []
    header = (f"{'y':>8} | {'instance':<22} {'n':>4} {'p_m':>7} {'p_d':>7} "
              f"{'p_t':>7} {'b':>6} {'c':>2} {'m':>7} {'f':>6} {'total':>6}")
    lines.append(header)
    lines.append("-" * len(header))
    any_warned = False
    for b in blocks:
        for k, r in enumerate(b["rows"]):
            ylab = b["y"] if k == 0 else ""
            mark = "*" if _protocol_of(r) in warned else " "
            any_warned = any_warned or mark == "*"
            lines.append(
                f"{ylab:>8} | {r.instance_id:<21}{mark} {r.n:>4} {r.p_m:>7} "
                f"{r.p_d:>7} {r.p_t:>7} {str(r.b).lower():>6} {r.c:>2} "
                f"{str(r.m_kb) + 'Kb':>7} {str(r.f).lower():>6} {r.total:>6}")
        lines.append("-" * len(header))
    if any_warned:
        lines.append("* row uses reconstructed cited-reference evaluators; "
                     "values carry a provenance warning")
    return "\n".join(lines) + "\n"


def _protocol_of(row: ScaledRow) -> str:
    return row.instance_id.split("-", 1)[0]
