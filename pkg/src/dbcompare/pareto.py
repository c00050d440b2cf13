"""Mafia-bound filtering and nondominated-set computation.

The approximate-equality relations are not transitive, so no sorting-based
skyline shortcut is sound: an instance survives only if no instance of the
filtered input dominates it.  The engine runs the full pairwise check,
vectorized over blocks of candidate dominators.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .attributes import DEFAULT_MEMORY_TOLERANCE_BITS
from .catalog import ProtocolInstance

_NEG_SENTINEL = -1.0e9  # stands in for log2(0) so array comparisons stay finite


@dataclass(frozen=True)
class MafiaBound:
    """Upper bound on mafia-fraud success probability, kept in log2 form."""

    log2: float

    def __post_init__(self):
        if self.log2 > 0:
            raise ValueError("mafia bound must lie in [0, 1]")

    @classmethod
    def parse(cls, text) -> "MafiaBound":
        """Accepts '2^-16', '2^{-16}', or a decimal like '0.5' / '1'."""
        if isinstance(text, (int, float)):
            return cls.from_value(float(text))
        s = str(text).strip()
        m = re.fullmatch(r"2\^\{?(-?\d+(?:\.\d+)?)\}?", s)
        if m:
            exp = float(m.group(1))
            if exp > 0:
                raise ValueError(f"bound above 1: {s}")
            return cls(exp)
        try:
            value = float(s)
        except ValueError:
            raise ValueError(f"cannot parse mafia bound: {s!r}") from None
        return cls.from_value(value)

    @classmethod
    def from_value(cls, p: float) -> "MafiaBound":
        if p < 0 or p > 1:
            raise ValueError(f"mafia bound out of [0,1]: {p}")
        return cls(float("-inf") if p == 0 else math.log2(p))

    @property
    def value(self) -> float:
        return 0.0 if math.isinf(self.log2) else 2.0 ** self.log2

    def label(self) -> str:
        if math.isinf(self.log2):
            return "0"
        if self.log2 == int(self.log2):
            return f"2^{int(self.log2)}"
        return f"{self.value:g}"


@dataclass(frozen=True)
class SolutionSet:
    members: List[ProtocolInstance]
    source: str

    def ids(self) -> List[str]:
        return [m.id for m in self.members]


def filter_mafia_bound(instances: Sequence[ProtocolInstance],
                       bound: MafiaBound) -> List[ProtocolInstance]:
    """Instances whose mafia-fraud success is at most the bound (inclusive)."""
    return [i for i in instances if i.vector.p_m.log2 <= bound.log2]


def _columns(instances: Sequence[ProtocolInstance]):
    n = len(instances)
    lpm = np.empty(n); lpd = np.empty(n); lpt = np.empty(n)
    e = np.empty(n, dtype=np.int64); c = np.empty(n, dtype=np.int64)
    m = np.empty(n, dtype=np.int64)
    s = np.empty(n, dtype=np.int8); b = np.empty(n, dtype=np.int8)
    for k, inst in enumerate(instances):
        v = inst.vector
        lpm[k] = v.p_m.log2 if math.isfinite(v.p_m.log2) else _NEG_SENTINEL
        lpd[k] = v.p_d.log2 if math.isfinite(v.p_d.log2) else _NEG_SENTINEL
        lpt[k] = v.p_t.log2 if math.isfinite(v.p_t.log2) else _NEG_SENTINEL
        e[k] = v.e; c[k] = v.c; m[k] = v.m; s[k] = v.s; b[k] = v.b
    return lpm, lpd, lpt, e, c, m, s, b


def dominated_mask(instances: Sequence[ProtocolInstance],
                   memory_tolerance_bits: int = DEFAULT_MEMORY_TOLERANCE_BITS,
                   block: int = 384) -> np.ndarray:
    """Boolean mask: True where some other input instance dominates."""
    n = len(instances)
    if n == 0:
        return np.zeros(0, dtype=bool)
    lpm, lpd, lpt, e, c, m, s, b = _columns(instances)
    tol = memory_tolerance_bits
    dominated = np.zeros(n, dtype=bool)
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        sl = slice(lo, hi)
        # still-undecided columns; an already-dominated instance stays a
        # legitimate dominator (rows always span the full input)
        cols = np.flatnonzero(~dominated)
        if cols.size == 0:
            break
        # weak: dominator (rows) no worse than column instance on every attribute
        weak = lpm[sl, None] < lpm[cols][None, :] + 1.0
        weak &= lpd[sl, None] < lpd[cols][None, :] + 1.0
        weak &= lpt[sl, None] < lpt[cols][None, :] + 1.0
        weak &= e[sl, None] <= e[cols][None, :]
        weak &= c[sl, None] <= c[cols][None, :]
        weak &= m[sl, None] < m[cols][None, :] + tol
        weak &= s[sl, None] <= s[cols][None, :]
        weak &= b[sl, None] <= b[cols][None, :]
        strict = lpm[sl, None] <= lpm[cols][None, :] - 1.0
        strict |= lpd[sl, None] <= lpd[cols][None, :] - 1.0
        strict |= lpt[sl, None] <= lpt[cols][None, :] - 1.0
        strict |= e[sl, None] < e[cols][None, :]
        strict |= c[sl, None] < c[cols][None, :]
        strict |= m[sl, None] <= m[cols][None, :] - tol
        strict |= s[sl, None] < s[cols][None, :]
        strict |= b[sl, None] < b[cols][None, :]
        dominated[cols] |= (weak & strict).any(axis=0)
    return dominated


def nondominated(instances: Sequence[ProtocolInstance],
                 source: str = "",
                 memory_tolerance_bits: int = DEFAULT_MEMORY_TOLERANCE_BITS) -> SolutionSet:
    """The maximal subset of the input not dominated within the input."""
    mask = dominated_mask(instances, memory_tolerance_bits)
    members = [inst for inst, dead in zip(instances, mask) if not dead]
    members.sort(key=lambda i: (i.protocol, i.param_values()))
    return SolutionSet(members=members, source=source or f"{len(instances)} instances")


@dataclass(frozen=True)
class SummaryRow:
    protocol: str
    representative: ProtocolInstance
    total: int


def representative_rows(solution: SolutionSet) -> List[SummaryRow]:
    """Per protocol: the member with fewest fast-phase bits, plus the count."""
    by_protocol = {}
    for inst in solution.members:
        by_protocol.setdefault(inst.protocol, []).append(inst)
    rows = []
    for protocol in sorted(by_protocol):
        group = by_protocol[protocol]
        rep = min(group, key=lambda i: (i.vector.e, i.param_values()))
        rows.append(SummaryRow(protocol=protocol, representative=rep,
                               total=len(group)))
    return rows


def pareto_pipeline(instances, bound: MafiaBound,
                    protocols: Optional[Sequence[str]] = None,
                    memory_tolerance_bits: int = DEFAULT_MEMORY_TOLERANCE_BITS):
    """filter -> nondominate -> summarize, the common service/CLI path."""
    pool = instances
    if protocols is not None:
        keep = set(protocols)
        pool = [i for i in pool if i.protocol in keep]
    filtered = filter_mafia_bound(pool, bound)
    solution = nondominated(filtered, source=f"D[{bound.label()}]",
                            memory_tolerance_bits=memory_tolerance_bits)
    return filtered, solution, representative_rows(solution)
