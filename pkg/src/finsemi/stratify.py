"""Base, layers, depth, and height of a finite semigroup.

The descending chain S ⊇ S² ⊇ ... stabilizes after at most |S| steps; the
stable set is the base, the least m with S^m = S^(m+1) is the height, and
the layers are the successive differences S_m = S^m \\ S^(m+1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    _power_chain,
    adjoin_zero,
    base_set,
    power_set,
    rees_quotient,
)
from .errors import InternalTheoremViolation
from .green import element_powers, regular_elements

BASE = "base"


@dataclass(frozen=True)
class StratificationReport:
    base: frozenset
    layers: tuple          # layers[m-1] = S_m for m = 1..height-1
    height: int
    depth_of: tuple        # per element: layer index (1-based) or "base"
    flags: dict            # grillet_stratified / globally_idempotent / base_equals_reg

    def to_json(self):
        return {
            "base": sorted(self.base),
            "layers": [sorted(layer) for layer in self.layers],
            "height": self.height,
            "flags": dict(self.flags),
        }


def stratify(S):
    """Chase the power chain to its fixed point and report the strata."""
    chain = _power_chain(S)
    height = len(chain)
    base = chain[-1]
    layers = tuple(chain[m - 1] - chain[m] for m in range(1, height))
    depth = [BASE] * S.order
    for m, layer in enumerate(layers, start=1):
        for x in layer:
            depth[x] = m
    flags = {
        "grillet_stratified": is_grillet_stratified(S),
        "globally_idempotent": height == 1,
        "base_equals_reg": base == regular_elements(S),
    }
    return StratificationReport(base=base, layers=layers, height=height,
                                depth_of=tuple(depth), flags=flags)


def depth(S, s):
    """The layer index of s, or "base"."""
    return stratify(S).depth_of[s]


def is_grillet_stratified(S):
    """Base is exactly {0}; zero-free semigroups are judged on S^0."""
    if S.zero is not None:
        return base_set(S) == {S.zero}
    return is_grillet_stratified(adjoin_zero(S))


@dataclass(frozen=True)
class Classification:
    height: int
    nil_stratified: bool
    globally_idempotent: bool
    quotient: object          # S/Base(S), a Semigroup with zero
    quotient_map: tuple
    nilpotency_index: int

    def to_json(self):
        return {
            "height": self.height,
            "nil_stratified": self.nil_stratified,
            "globally_idempotent": self.globally_idempotent,
            "quotient_order": self.quotient.order,
            "nilpotency_index": self.nilpotency_index,
        }


def classify(S):
    """Height, nil-stratified verdict, and the Rees-quotient witness.

    The nil-stratified check (every element has a power in the base) is run
    independently of the height even though finiteness makes it redundant: a
    mismatch means the base computation is broken and raises.
    """
    report = stratify(S)
    base = report.base
    nil = all(any(p in base for p in element_powers(S, s)) for s in S.elements)
    if not nil:
        raise InternalTheoremViolation(
            "element with no power in the base despite a finite height")
    quotient, qmap = rees_quotient(S, base)
    zero = quotient.zero
    index = 1
    while power_set(quotient, index) != {zero}:
        index += 1
        if index > quotient.order + 1:
            raise InternalTheoremViolation("S/Base(S) is not nilpotent")
    if index != report.height:
        raise InternalTheoremViolation(
            f"nilpotency index {index} of S/Base(S) != height {report.height}")
    return Classification(height=report.height, nil_stratified=nil,
                          globally_idempotent=report.flags["globally_idempotent"],
                          quotient=quotient, quotient_map=qmap,
                          nilpotency_index=index)
