"""Attribute domains, approximate equality, and vector dominance.

Eight attributes characterize a protocol instance: three fraud-success
probabilities (mafia, distance, terrorist), bits exchanged in the fast
phase, prover crypto-operation count, prover memory in bits, and two
boolean flags (final slow phase, multiple-bit exchanges).

Probabilities are carried as base-2 logarithms so that values down to
2^-256 and beyond compare exactly without underflow.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Union

AttributeValue = Union["Probability", int, bool]

#: Memory differences below this many bits are considered insignificant.
DEFAULT_MEMORY_TOLERANCE_BITS = 1024


class AttributeId(enum.Enum):
    """The eight comparison attributes."""

    PM = "pm"    # mafia fraud resistance (success probability, lower = better)
    PD = "pd"    # distance fraud resistance
    PT = "pt"    # terrorist fraud resistance
    NBE = "e"    # bits exchanged during the fast phase
    NC = "c"     # cryptographic operations performed by the prover
    NM = "m"     # prover memory, bits
    NS = "s"     # final slow phase present (false = better)
    NB = "b"     # multiple-bit exchanges used (false = better)


PROBABILITY_ATTRS = (AttributeId.PM, AttributeId.PD, AttributeId.PT)
COUNT_ATTRS = (AttributeId.NBE, AttributeId.NC)
FLAG_ATTRS = (AttributeId.NS, AttributeId.NB)


@dataclass(frozen=True, order=False)
class Probability:
    """A success probability in [0, 1] stored as log2(p).

    p = 0 maps to log2 = -inf and p = 1 to log2 = 0.  Arithmetic is done
    on the caller's side; this class only stores and compares.
    """

    log2: float

    def __post_init__(self):
        if self.log2 > 0:
            # tolerate tiny positive drift from float arithmetic
            if self.log2 < 1e-9:
                object.__setattr__(self, "log2", 0.0)
            else:
                raise ValueError(f"probability above 1: log2={self.log2}")

    @classmethod
    def from_value(cls, p: float) -> "Probability":
        if p < 0 or p > 1:
            raise ValueError(f"probability out of [0,1]: {p}")
        if p == 0:
            return cls(float("-inf"))
        return cls(math.log2(p))

    @classmethod
    def exact_pow2(cls, exponent: float) -> "Probability":
        """Probability 2**exponent, exponent <= 0."""
        return cls(float(exponent))

    @property
    def value(self) -> float:
        return 0.0 if math.isinf(self.log2) else 2.0 ** self.log2

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return f"Probability(log2={self.log2:.6g})"


def _prob_log2(x) -> float:
    if isinstance(x, Probability):
        return x.log2
    if x < 0 or x > 1:
        raise ValueError(f"probability out of [0,1]: {x}")
    return float("-inf") if x == 0 else math.log2(x)


@dataclass(frozen=True)
class ApproxSpec:
    """Total order plus approximate-equality relation for one attribute."""

    attribute: AttributeId
    less: Callable[[AttributeValue, AttributeValue], bool]
    approx: Callable[[AttributeValue, AttributeValue], bool]


def _make_specs(memory_tolerance_bits: int) -> dict:
    def prob_less(x, y):
        return _prob_log2(x) < _prob_log2(y)

    def prob_approx(x, y):
        lx, ly = _prob_log2(x), _prob_log2(y)
        if math.isinf(lx) or math.isinf(ly):
            return lx == ly  # only p=0 is approx-equal to p=0
        return abs(lx - ly) < 1.0

    def nat_less(x, y):
        return x < y

    def nat_eq(x, y):
        return x == y

    def mem_approx(x, y):
        return abs(x - y) < memory_tolerance_bits

    def bool_less(x, y):
        return (not x) and y

    def bool_eq(x, y):
        return x == y

    specs = {}
    for attr in PROBABILITY_ATTRS:
        specs[attr] = ApproxSpec(attr, prob_less, prob_approx)
    for attr in COUNT_ATTRS:
        specs[attr] = ApproxSpec(attr, nat_less, nat_eq)
    specs[AttributeId.NM] = ApproxSpec(AttributeId.NM, nat_less, mem_approx)
    for attr in FLAG_ATTRS:
        specs[attr] = ApproxSpec(attr, bool_less, bool_eq)
    return specs


_DEFAULT_SPECS = _make_specs(DEFAULT_MEMORY_TOLERANCE_BITS)


def attribute_specs(memory_tolerance_bits: int = DEFAULT_MEMORY_TOLERANCE_BITS) -> dict:
    """The shipped ApproxSpec per attribute, with a configurable memory tolerance."""
    if memory_tolerance_bits == DEFAULT_MEMORY_TOLERANCE_BITS:
        return _DEFAULT_SPECS
    return _make_specs(memory_tolerance_bits)


def approx_equal(attr: AttributeId, x, y, specs=None) -> bool:
    """Whether x and y are approximately equal under the attribute's relation."""
    spec = (specs or _DEFAULT_SPECS)[attr]
    return spec.approx(x, y)


def strictly_precedes(attr: AttributeId, x, y, specs=None) -> bool:
    """x is strictly better than y: below in the order and not approx-equal."""
    spec = (specs or _DEFAULT_SPECS)[attr]
    return spec.less(x, y) and not spec.approx(x, y)


def weakly_precedes(attr: AttributeId, x, y, specs=None) -> bool:
    """x strictly precedes y or is approximately equal to it."""
    spec = (specs or _DEFAULT_SPECS)[attr]
    return spec.approx(x, y) or (spec.less(x, y) and not spec.approx(x, y))


@dataclass(frozen=True)
class AttributeVector:
    """The eight evaluated attribute values of one protocol instance."""

    p_m: Probability
    p_d: Probability
    p_t: Probability
    e: int
    c: int
    m: int
    s: bool
    b: bool

    def get(self, attr: AttributeId):
        return getattr(self, _FIELD_BY_ATTR[attr])

    def as_dict(self) -> dict:
        return {
            "p_m": self.p_m.value,
            "p_d": self.p_d.value,
            "p_t": self.p_t.value,
            "log2_p_m": self.p_m.log2,
            "log2_p_d": self.p_d.log2,
            "log2_p_t": self.p_t.log2,
            "e": self.e,
            "c": self.c,
            "m": self.m,
            "s": self.s,
            "b": self.b,
        }


_FIELD_BY_ATTR = {
    AttributeId.PM: "p_m",
    AttributeId.PD: "p_d",
    AttributeId.PT: "p_t",
    AttributeId.NBE: "e",
    AttributeId.NC: "c",
    AttributeId.NM: "m",
    AttributeId.NS: "s",
    AttributeId.NB: "b",
}

ATTRIBUTE_ORDER = (
    AttributeId.PM,
    AttributeId.PD,
    AttributeId.PT,
    AttributeId.NBE,
    AttributeId.NC,
    AttributeId.NM,
    AttributeId.NS,
    AttributeId.NB,
)


def dominates(x: AttributeVector, y: AttributeVector, specs=None) -> bool:
    """x dominates y: weakly better everywhere, strictly better somewhere."""
    specs = specs or _DEFAULT_SPECS
    strict = False
    for attr in ATTRIBUTE_ORDER:
        spec = specs[attr]
        xv, yv = x.get(attr), y.get(attr)
        if spec.approx(xv, yv):
            continue
        if spec.less(xv, yv):
            strict = True
        else:
            return False
    return strict
