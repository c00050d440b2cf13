"""Run configuration and catalog-override files.

The run configuration is a flat ``key = value`` text file; the catalog
file is JSON and can override per-protocol flag values, crypto-op counts,
and linear memory coefficients, plus the global size constants, without
touching any engine code.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from .attributes import DEFAULT_MEMORY_TOLERANCE_BITS
from .catalog import (ALL_PROTOCOL_IDS, GlobalConstants, ProtocolInstance,
                      generate_instances)

_RUNCONFIG_KEYS = {
    "catalog", "delta", "sigma", "kappa", "memory_tolerance_bits",
    "protocols", "output_dir", "port",
}


@dataclass
class RunConfig:
    catalog: Optional[str] = None
    delta: int = 128
    sigma: int = 128
    kappa: int = 128
    memory_tolerance_bits: int = DEFAULT_MEMORY_TOLERANCE_BITS
    protocols: Optional[List[str]] = None   # None = every registered protocol
    output_dir: str = "."
    port: int = 8321

    @classmethod
    def load(cls, path) -> "RunConfig":
        cfg = cls()
        text = Path(path).read_text()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _RUNCONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            if key in ("delta", "sigma", "kappa", "memory_tolerance_bits",
                       "port"):
                setattr(cfg, key, int(value))
            elif key == "protocols":
                names = [p.strip() for p in value.split(",") if p.strip()]
                unknown = [p for p in names if p not in ALL_PROTOCOL_IDS]
                if unknown:
                    raise ValueError(f"{path}:{lineno}: unknown protocols "
                                     f"{unknown}")
                cfg.protocols = names
            else:
                setattr(cfg, key, value)
        cfg.validate()
        return cfg

    def validate(self):
        if self.delta <= 0 or self.sigma <= 0:
            raise ValueError("delta and sigma must be positive")
        if self.memory_tolerance_bits <= 0:
            raise ValueError("memory tolerance must be positive")
        if not (0 < self.port < 65536):
            raise ValueError("port out of range")

    def constants(self) -> GlobalConstants:
        return GlobalConstants(delta=self.delta, sigma=self.sigma,
                               kappa=self.kappa)


@dataclass
class CatalogOverrides:
    """Optional data overrides parsed from the JSON catalog file."""

    constants: Dict[str, int] = field(default_factory=dict)
    memory_tolerance_bits: Optional[int] = None
    protocols: Dict[str, dict] = field(default_factory=dict)

    @classmethod
    def load(cls, path) -> "CatalogOverrides":
        doc = json.loads(Path(path).read_text())
        if not isinstance(doc, dict):
            raise ValueError("catalog file must hold a JSON object")
        known = {"constants", "memory_tolerance_bits", "protocols"}
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"catalog file: unknown keys {sorted(unknown)}")
        ov = cls(constants=dict(doc.get("constants", {})),
                 memory_tolerance_bits=doc.get("memory_tolerance_bits"),
                 protocols=dict(doc.get("protocols", {})))
        for pid, entry in ov.protocols.items():
            if pid not in ALL_PROTOCOL_IDS:
                raise ValueError(f"catalog file: unknown protocol {pid!r}")
            bad = set(entry) - {"s", "b", "c", "memory"}
            if bad:
                raise ValueError(f"catalog file: {pid}: unknown fields "
                                 f"{sorted(bad)}")
        return ov

    def apply(self, instances: List[ProtocolInstance],
              consts: GlobalConstants) -> List[ProtocolInstance]:
        if not self.protocols:
            return instances
        out = []
        for inst in instances:
            entry = self.protocols.get(inst.protocol)
            if not entry:
                out.append(inst)
                continue
            vec = inst.vector
            changes = {}
            if "s" in entry:
                changes["s"] = bool(entry["s"])
            if "b" in entry:
                changes["b"] = bool(entry["b"])
            if "c" in entry:
                changes["c"] = int(entry["c"])
            if "memory" in entry:
                co = entry["memory"]
                changes["m"] = (co.get("n", 0) * inst.n
                                + co.get("delta", 0) * consts.delta
                                + co.get("sigma", 0) * consts.sigma
                                + co.get("const", 0))
            out.append(dataclasses.replace(
                inst, vector=dataclasses.replace(vec, **changes)))
        return out


def build_instances(cfg: RunConfig) -> List[ProtocolInstance]:
    """Generate the configured instance set, catalog overrides applied."""
    overrides = CatalogOverrides.load(cfg.catalog) if cfg.catalog else None
    consts = cfg.constants()
    if overrides and overrides.constants:
        merged = {"delta": cfg.delta, "sigma": cfg.sigma, "kappa": cfg.kappa}
        merged.update(overrides.constants)
        consts = GlobalConstants(**merged)
    instances = generate_instances(cfg.protocols, consts)
    if overrides:
        instances = overrides.apply(instances, consts)
    return instances
