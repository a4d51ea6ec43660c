"""Axiom classification by partition structure.

A class holds exactly when the axiom's evaluation is constant on every
fiber of the corresponding projection of the decision space: profile
(structural), rule (procedural), outcome (consequentialist),
profile-outcome (blackbox), rule-outcome (caudal). Trivial axioms are the
constant evaluations; exigent means none of the other classes hold. The
(profile, rule) projection is omitted because its fibers are singletons --
the pair already determines the outcome -- so it never constrains
anything.

All classes that hold are reported. The "most specific" single label uses
a fixed priority (trivial, then single-component classes, then
two-component classes, then exigent); the priority is a reporting
convention of this tool, since overlapping classes have no canonical
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._indexing import bit_buffer, outcome_index_fn
from .axioms import Axiom, IntensionalAxiom, materialize
from .domain import DEFAULT_CAP, Decision, DecisionDomain

CLASS_ORDER = (
    "positively-trivial",
    "negatively-trivial",
    "structural",
    "procedural",
    "consequentialist",
    "blackbox",
    "caudal",
    "exigent",
)

# Decision components an observer must see to evaluate an axiom of the
# given (most specific) class.
CLASS_REQUIREMENTS: Mapping[str, frozenset[str]] = {
    "positively-trivial": frozenset(),
    "negatively-trivial": frozenset(),
    "structural": frozenset({"profile"}),
    "procedural": frozenset({"rule"}),
    "consequentialist": frozenset({"outcome"}),
    "blackbox": frozenset({"profile", "outcome"}),
    "caudal": frozenset({"rule", "outcome"}),
    "exigent": frozenset({"profile", "rule", "outcome"}),
}


@dataclass(frozen=True)
class ClassSet:
    """All classes that hold for one axiom, plus per-class counterexamples.

    ``witnesses`` maps each failed class to a pair of decisions lying in
    one fiber of that class's projection but evaluating differently.
    ``exigent`` is derived: set exactly when every other flag is clear.
    """

    positively_trivial: bool
    negatively_trivial: bool
    structural: bool
    procedural: bool
    consequentialist: bool
    blackbox: bool
    caudal: bool
    witnesses: Mapping[str, tuple[Decision, Decision]]
    exigent_reducibility: str | None = None

    @property
    def exigent(self) -> bool:
        return not (
            self.positively_trivial
            or self.negatively_trivial
            or self.structural
            or self.procedural
            or self.consequentialist
            or self.blackbox
            or self.caudal
        )

    def flags(self) -> dict[str, bool]:
        return {
            "positively-trivial": self.positively_trivial,
            "negatively-trivial": self.negatively_trivial,
            "structural": self.structural,
            "procedural": self.procedural,
            "consequentialist": self.consequentialist,
            "blackbox": self.blackbox,
            "caudal": self.caudal,
            "exigent": self.exigent,
        }

    def holds(self, label: str) -> bool:
        return self.flags()[label]

    @property
    def most_specific(self) -> str:
        for label in CLASS_ORDER:
            if self.holds(label):
                return label
        raise AssertionError("unreachable: exigent is the catch-all")

    def required_components(self) -> frozenset[str]:
        return CLASS_REQUIREMENTS[self.most_specific]


def _fiber_scan(size: int, buf: bytes, key_of) -> tuple[bool, tuple[int, int] | None]:
    """Constancy of the bit value on every fiber of ``key_of``.

    Returns (constant_everywhere, witness) where the witness is a pair of
    decision indices in one fiber with differing values.
    """
    first_val: dict[int, int] = {}
    first_idx: dict[int, int] = {}
    for d in range(size):
        v = (buf[d >> 3] >> (d & 7)) & 1
        key = key_of(d)
        if key not in first_val:
            first_val[key] = v
            first_idx[key] = d
        elif first_val[key] != v:
            return False, (first_idx[key], d)
    return True, None


def classify(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> ClassSet:
    """Classify by exhaustive fiber-constancy tests over the enumerated domain."""
    ext = materialize(axiom, domain, cap)
    dom = ext.domain
    n, m = len(dom.profiles), len(dom.outcomes)
    size = dom.decision_count()
    buf = bit_buffer(ext.bits, size)
    out_idx = outcome_index_fn(dom)

    projections = {
        "structural": lambda d: d % n,
        "procedural": lambda d: d // n,
        "consequentialist": out_idx,
        "blackbox": lambda d: (d % n) * m + out_idx(d),
        "caudal": lambda d: (d // n) * m + out_idx(d),
    }

    flags: dict[str, bool] = {}
    witnesses: dict[str, tuple[Decision, Decision]] = {}
    for label, key_of in projections.items():
        ok, pair = _fiber_scan(size, buf, key_of)
        flags[label] = ok
        if pair is not None:
            witnesses[label] = (dom.decision_at(pair[0]), dom.decision_at(pair[1]))

    full = (1 << size) - 1
    pos = ext.bits == full
    neg = ext.bits == 0
    if not pos:
        violating = ((ext.bits ^ full) & -(ext.bits ^ full)).bit_length() - 1
        obeying = (ext.bits & -ext.bits).bit_length() - 1 if ext.bits else violating
        witnesses["positively-trivial"] = (
            dom.decision_at(obeying),
            dom.decision_at(violating),
        )
    if not neg:
        obeying = (ext.bits & -ext.bits).bit_length() - 1
        inv = ext.bits ^ full
        violating = (inv & -inv).bit_length() - 1 if inv else obeying
        witnesses["negatively-trivial"] = (
            dom.decision_at(obeying),
            dom.decision_at(violating),
        )

    # Reducible/irreducible is declared metadata on intensional axioms and
    # is reported only for exigent axioms, never inferred from partitions.
    exigent = not (pos or neg or any(flags.values()))
    reducibility = None
    if exigent and isinstance(axiom, IntensionalAxiom):
        reducibility = "irreducible" if axiom.needs_outcome_value else "reducible"
    return ClassSet(
        positively_trivial=pos,
        negatively_trivial=neg,
        structural=flags["structural"],
        procedural=flags["procedural"],
        consequentialist=flags["consequentialist"],
        blackbox=flags["blackbox"],
        caudal=flags["caudal"],
        witnesses=witnesses,
        exigent_reducibility=reducibility,
    )


def is_trivial(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> str:
    """Constant-evaluation test: "positively", "negatively" or "non-trivial"."""
    ext = materialize(axiom, domain, cap)
    size = ext.domain.decision_count()
    if ext.bits == (1 << size) - 1:
        return "positively"
    if ext.bits == 0:
        return "negatively"
    return "non-trivial"


def profile_rule_projection_constant(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> bool:
    """Fiber constancy over the (profile, rule) projection.

    Holds for every axiom, since a (profile, rule) pair determines its
    outcome and each fiber is a singleton; exposed so the property can be
    asserted rather than assumed.
    """
    ext = materialize(axiom, domain, cap)
    size = ext.domain.decision_count()
    buf = bit_buffer(ext.bits, size)
    ok, _ = _fiber_scan(size, buf, lambda d: d)
    return ok
