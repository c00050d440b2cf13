"""Standalone-SVG spider charts and per-protocol resistance curves.

Radial convention (matching the published charts): farther out is better.
Fraud axes are log-scaled from probability 1 at the center to 2^-n_ref at
the rim; boolean axes put the favorable value (false) at the rim; memory
and crypto-op axes carry a linear 0..10 score, 10·(1 - value/reference).
"""

from __future__ import annotations

import io
import csv
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .attributes import AttributeId
from .catalog import ProtocolInstance
from .reporting import scale_memory

SECURITY_AXES = (AttributeId.PM, AttributeId.PD, AttributeId.PT)

AXIS_TITLES = {
    AttributeId.PM: "mafia fraud",
    AttributeId.PD: "distance fraud",
    AttributeId.PT: "terrorist fraud",
    AttributeId.NBE: "bits exchanged",
    AttributeId.NM: "memory",
    AttributeId.NC: "crypto operations",
    AttributeId.NS: "final slow phase",
    AttributeId.NB: "multiple-bit exchange",
}

_PALETTE = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d68910", "#16a085"]


@dataclass(frozen=True)
class SpiderAxisConfig:
    """Axis list plus scaling references for one spider chart."""

    axes: Tuple[AttributeId, ...]
    n_ref: int                      # fraud axes run 1 .. 2^-n_ref
    memory_ref_kb: float = 10.0     # linear-score reference for memory (Kb)
    crypto_ref: float = 10.0        # linear-score reference for crypto ops

    @classmethod
    def for_instances(cls, instances: Sequence[ProtocolInstance],
                      normalization: Optional[ProtocolInstance] = None,
                      axes: Optional[Sequence[AttributeId]] = None):
        """Default config: security axes plus every axis where values differ."""
        ref = normalization or max(instances, key=lambda i: i.n)
        if axes is None:
            chosen: List[AttributeId] = list(SECURITY_AXES)
            for attr in (AttributeId.NBE, AttributeId.NM, AttributeId.NC,
                         AttributeId.NS, AttributeId.NB):
                vals = {_raw(i, attr) for i in instances}
                if len(vals) > 1:
                    chosen.append(attr)
        else:
            chosen = list(axes)
        mem_ref = max(10.0, float(max(scale_memory(i.vector.m)
                                      for i in instances)) * 1.25)
        crypto_ref = max(10.0, float(max(i.vector.c for i in instances)) * 1.25)
        return cls(axes=tuple(chosen), n_ref=ref.n,
                   memory_ref_kb=mem_ref, crypto_ref=crypto_ref)


def _raw(inst: ProtocolInstance, attr: AttributeId):
    v = inst.vector.get(attr)
    return v.log2 if attr in SECURITY_AXES else v


def axis_fraction(inst: ProtocolInstance, attr: AttributeId,
                  cfg: SpiderAxisConfig) -> float:
    """Radial position in [0, 1]; 1 = rim = most favorable."""
    v = inst.vector
    if attr in SECURITY_AXES:
        l = v.get(attr).log2
        if math.isinf(l):
            return 1.0
        return max(0.0, min(1.0, -l / cfg.n_ref))
    if attr is AttributeId.NS:
        return 0.0 if v.s else 1.0
    if attr is AttributeId.NB:
        return 0.0 if v.b else 1.0
    if attr is AttributeId.NM:
        score = 10.0 * (1.0 - scale_memory(v.m) / cfg.memory_ref_kb)
    elif attr is AttributeId.NC:
        score = 10.0 * (1.0 - v.c / cfg.crypto_ref)
    else:  # NBE: linear against the reference round count
        score = 10.0 * (1.0 - v.e / (2.0 * cfg.n_ref))
    return max(0.0, min(10.0, score)) / 10.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def emit_spider(instances: Sequence[ProtocolInstance],
                config: Optional[SpiderAxisConfig] = None,
                normalization: Optional[ProtocolInstance] = None,
                size: int = 640) -> str:
    """One closed polygon per instance over the configured axes, as SVG."""
    if not instances:
        raise ValueError("spider chart needs at least one instance")
    if len(instances) > 6:
        raise ValueError("spider chart supports at most 6 instances")
    cfg = config or SpiderAxisConfig.for_instances(instances, normalization)
    axes = cfg.axes
    cx = cy = size / 2.0
    radius = size * 0.36
    k = len(axes)

    def point(idx: int, frac: float) -> Tuple[float, float]:
        ang = -math.pi / 2 + 2 * math.pi * idx / k
        return (cx + radius * frac * math.cos(ang),
                cy + radius * frac * math.sin(ang))

    parts: List[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">')
    parts.append(f'<rect width="{size}" height="{size}" fill="white"/>')
    # rings
    for frac in (0.25, 0.5, 0.75, 1.0):
        ring = " ".join(f"{_fmt(point(i, frac)[0])},{_fmt(point(i, frac)[1])}"
                        for i in range(k))
        parts.append(f'<polygon points="{ring}" fill="none" '
                     f'stroke="#dddddd" stroke-width="1"/>')
    # axes and titles
    for i, attr in enumerate(axes):
        x, y = point(i, 1.0)
        parts.append(f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(x)}" '
                     f'y2="{_fmt(y)}" stroke="#999999" stroke-width="1"/>')
        lx, ly = point(i, 1.13)
        parts.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="13" '
                     f'text-anchor="middle" fill="#333333">'
                     f'{AXIS_TITLES[attr]}</text>')
    # polygons
    for j, inst in enumerate(instances):
        color = _PALETTE[j % len(_PALETTE)]
        pts = " ".join(
            f"{_fmt(point(i, axis_fraction(inst, attr, cfg))[0])},"
            f"{_fmt(point(i, axis_fraction(inst, attr, cfg))[1])}"
            for i, attr in enumerate(axes))
        parts.append(f'<polygon points="{pts}" fill="{color}" '
                     f'fill-opacity="0.12" stroke="{color}" stroke-width="2"/>')
        for i, attr in enumerate(axes):
            x, y = point(i, axis_fraction(inst, attr, cfg))
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
                         f'fill="{color}"/>')
    # legend
    for j, inst in enumerate(instances):
        color = _PALETTE[j % len(_PALETTE)]
        y = 22 + 18 * j
        parts.append(f'<rect x="12" y="{y - 11}" width="12" height="12" '
                     f'fill="{color}"/>')
        parts.append(f'<text x="30" y="{y}" font-size="13" '
                     f'fill="#333333">{_xml(inst.id)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _xml(s: str) -> str:
    return (s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


FRAUD_FIELD = {"mafia": "p_m", "distance": "p_d", "terrorist": "p_t"}

DEFAULT_CURVE_POINTS = tuple(range(32, 257, 32))


def resistance_series(instances: Sequence[ProtocolInstance], fraud: str,
                      points: Sequence[int] = DEFAULT_CURVE_POINTS
                      ) -> Dict[str, List[Tuple[int, float]]]:
    """Per protocol: best (minimum) fraud value at each round count."""
    if fraud not in FRAUD_FIELD:
        raise ValueError(f"unknown fraud kind: {fraud!r}")
    if not points:
        raise ValueError("need at least one round-count point")
    field_name = FRAUD_FIELD[fraud]
    series: Dict[str, List[Tuple[int, float]]] = {}
    by_key: Dict[Tuple[str, int], float] = {}
    for inst in instances:
        key = (inst.protocol, inst.n)
        val = getattr(inst.vector, field_name).log2
        if key not in by_key or val < by_key[key]:
            by_key[key] = val
    protocols = sorted({p for p, _ in by_key})
    for protocol in protocols:
        pts = [(n, by_key[(protocol, n)]) for n in points
               if (protocol, n) in by_key]
        if pts:
            series[protocol] = pts
    return series


def series_to_csv(series: Dict[str, List[Tuple[int, float]]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["protocol", "n", "log2_value"])
    for protocol in sorted(series):
        for n, log2v in series[protocol]:
            w.writerow([protocol, n, f"{log2v:.6f}"])
    return buf.getvalue()


def emit_resistance_curves(instances: Sequence[ProtocolInstance], fraud: str,
                           points: Sequence[int] = DEFAULT_CURVE_POINTS,
                           size: Tuple[int, int] = (760, 480)) -> str:
    """Log-scale chart of best per-protocol resistance versus round count."""
    series = resistance_series(instances, fraud, points)
    width, height = size
    lo = min((v for pts in series.values() for _, v in pts), default=-1.0)
    lo = min(lo, -1.0)
    x0, y0, x1, y1 = 70, 30, width - 160, height - 50
    xs = sorted({n for pts in series.values() for n, _ in pts})

    def xpos(n):
        return x0 + (x1 - x0) * (n - xs[0]) / max(1, xs[-1] - xs[0])

    def ypos(log2v):
        return y0 + (y1 - y0) * (log2v / lo)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">',
             f'<rect width="{width}" height="{height}" fill="white"/>',
             f'<line x1="{x0}" y1="{y1}" x2="{x1}" y2="{y1}" stroke="#333"/>',
             f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#333"/>']
    for n in xs:
        parts.append(f'<text x="{_fmt(xpos(n))}" y="{y1 + 18}" font-size="11" '
                     f'text-anchor="middle" fill="#333">{n}</text>')
    ticks = 4
    for t in range(ticks + 1):
        lv = lo * t / ticks
        parts.append(f'<text x="{x0 - 8}" y="{_fmt(ypos(lv) + 4)}" '
                     f'font-size="11" text-anchor="end" fill="#333">'
                     f'2^{int(round(lv))}</text>')
    parts.append(f'<text x="{(x0 + x1) // 2}" y="{height - 12}" '
                 f'font-size="12" text-anchor="middle" fill="#333">'
                 f'rounds of the fast phase</text>')
    for j, protocol in enumerate(sorted(series)):
        color = _PALETTE[j % len(_PALETTE)]
        pts = series[protocol]
        path = " ".join(f"{_fmt(xpos(n))},{_fmt(ypos(v))}" for n, v in pts)
        parts.append(f'<polyline points="{path}" fill="none" '
                     f'stroke="{color}" stroke-width="2"/>')
        ly = 30 + 16 * j
        parts.append(f'<rect x="{x1 + 16}" y="{ly - 9}" width="10" '
                     f'height="10" fill="{color}"/>')
        parts.append(f'<text x="{x1 + 32}" y="{ly}" font-size="12" '
                     f'fill="#333">{_xml(protocol)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
