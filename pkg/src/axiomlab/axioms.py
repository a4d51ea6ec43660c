"""Axioms as total 0/1 evaluators over decisions.

Two forms: extensional (a bitset over the enumerated decision space) and
intensional (a predicate with declared information requirements). Both are
immutable and evaluate purely. Logical combinators act pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .domain import DEFAULT_CAP, Decision, DecisionDomain, RuleTable
from .errors import (
    CapExceededError,
    DomainMismatchError,
    InvalidParameterError,
    NondeterministicAxiomError,
    UnknownIdError,
)

COMPONENTS = ("profile", "rule", "outcome")

# Number of decisions double-evaluated when materializing an intensional
# axiom, as a determinism spot-check on the (side-effect-free by contract)
# predicate.
_DETERMINISM_SPOT_CHECKS = 8


class Axiom:
    """Base type. Subclasses implement ``_evaluate`` on validated decisions."""

    domain: DecisionDomain
    name: str | None

    def evaluate(self, decision: Decision) -> int:
        """1 if the decision obeys this axiom, 0 if it violates it."""
        d = self.domain
        d.profiles.index(decision.profile)
        d.outcomes.index(decision.outcome)
        if not d.contains_rule(decision.rule):
            raise DomainMismatchError(
                "decision's rule is not in this axiom's rule universe"
            )
        return 1 if self._evaluate(decision) else 0

    def _evaluate(self, decision: Decision) -> bool:
        raise NotImplementedError


def evaluate(axiom: Axiom, decision: Decision) -> int:
    return axiom.evaluate(decision)


@dataclass(frozen=True, eq=False)
class ExtensionalAxiom(Axiom):
    """An axiom given by its obeying set, as a bitset over decision indices."""

    domain: DecisionDomain
    bits: int
    name: str | None = None

    def __post_init__(self):
        size = self.domain.decision_count()
        if self.bits < 0 or self.bits >> size:
            raise InvalidParameterError(
                f"bitset does not fit the {size}-decision domain"
            )

    def _evaluate(self, decision: Decision) -> bool:
        return bool((self.bits >> self.domain.decision_index(decision)) & 1)


@dataclass(frozen=True, eq=False)
class IntensionalAxiom(Axiom):
    """An axiom given by a predicate plus declared information requirements.

    ``requires`` declares which decision components the predicate reads, a
    subset of {"profile", "rule", "outcome"}; ``needs_outcome_value`` marks
    predicates that must know the realized outcome f(x) (the marker that
    separates reducible from irreducible exigent axioms, which partition
    sets alone cannot distinguish). ``outcome_slices``, when present, maps
    each profile to the exact outcome set realized by obeying decisions; it
    is declared metadata that lets reduction-based operations run on rule
    universes far too large to enumerate, and it is cross-checked against
    enumeration whenever the domain is small enough.

    Predicates must be pure and must not depend on rule labels (rule
    equality is extensional).
    """

    domain: DecisionDomain
    predicate: Callable[[Decision], bool]
    requires: frozenset[str] | None = None
    needs_outcome_value: bool = False
    name: str | None = None
    outcome_slices: Callable[[str], frozenset[str]] | None = None

    def __post_init__(self):
        if self.requires is not None:
            bad = set(self.requires) - set(COMPONENTS)
            if bad:
                raise InvalidParameterError(f"unknown components {sorted(bad)}")
            object.__setattr__(self, "requires", frozenset(self.requires))

    def _evaluate(self, decision: Decision) -> bool:
        return bool(self.predicate(decision))


DecisionList = tuple[Decision, ...]


def from_decision_list(
    decisions: Iterable[Decision],
    domain: DecisionDomain,
    name: str | None = None,
    cap: int = DEFAULT_CAP,
) -> ExtensionalAxiom:
    """Extensional axiom obeyed by exactly the listed decisions."""
    count = domain.decision_count()
    if count > cap:
        raise CapExceededError(count, cap, what="decisions")
    bits = 0
    for d in decisions:
        bits |= 1 << domain.decision_index(d)
    return ExtensionalAxiom(domain=domain, bits=bits, name=name)


def characterizing_list(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> DecisionList:
    """The decisions that obey the axiom, in stable enumeration order."""
    domain = _resolve_domain(axiom, domain)
    if isinstance(axiom, ExtensionalAxiom):
        count = domain.decision_count()
        if count > cap:
            raise CapExceededError(count, cap, what="decisions")
        bits = axiom.bits
        out = []
        index = 0
        while bits:
            if bits & 1:
                out.append(domain.decision_at(index))
            bits >>= 1
            index += 1
        return tuple(out)
    out = []
    for i, decision in enumerate(domain.enumerate_decisions(cap)):
        bit = axiom.evaluate(decision)
        if i < _DETERMINISM_SPOT_CHECKS and axiom.evaluate(decision) != bit:
            raise NondeterministicAxiomError(
                f"axiom {axiom.name!r} evaluated decision {i} inconsistently"
            )
        if bit:
            out.append(decision)
    return tuple(out)


def materialize(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> ExtensionalAxiom:
    """Evaluate an axiom over the whole enumerated domain into bitset form."""
    domain = _resolve_domain(axiom, domain)
    if isinstance(axiom, ExtensionalAxiom):
        return axiom
    bits = 0
    for index, bit in enumerate(_bit_stream(axiom, domain, cap)):
        if bit:
            bits |= 1 << index
    return ExtensionalAxiom(domain=domain, bits=bits, name=axiom.name)


def _bit_stream(axiom: Axiom, domain: DecisionDomain, cap: int):
    spot = _DETERMINISM_SPOT_CHECKS
    for i, decision in enumerate(domain.enumerate_decisions(cap)):
        bit = axiom.evaluate(decision)
        if i < spot and axiom.evaluate(decision) != bit:
            raise NondeterministicAxiomError(
                f"axiom {axiom.name!r} evaluated decision {i} inconsistently"
            )
        yield bit


def _resolve_domain(axiom: Axiom, domain: DecisionDomain | None) -> DecisionDomain:
    if domain is not None and domain != axiom.domain:
        raise DomainMismatchError("axiom belongs to a different domain")
    return axiom.domain


def _common_domain(axioms: Sequence[Axiom]) -> DecisionDomain:
    if not axioms:
        raise InvalidParameterError("need at least one axiom")
    domain = axioms[0].domain
    for a in axioms[1:]:
        if a.domain != domain:
            raise DomainMismatchError("axioms span different domains")
    return domain


def _requires_union(axioms: Sequence[Axiom]) -> frozenset[str] | None:
    out: set[str] = set()
    for a in axioms:
        if isinstance(a, IntensionalAxiom):
            if a.requires is None:
                return None
            out |= a.requires
        else:
            out |= {"profile", "rule", "outcome"}
    return frozenset(out)


def combine_and(*axioms: Axiom, name: str | None = None) -> Axiom:
    """Pointwise minimum: obeys iff every operand obeys."""
    axioms = _flatten(axioms)
    domain = _common_domain(axioms)
    if all(isinstance(a, ExtensionalAxiom) for a in axioms):
        bits = axioms[0].bits
        for a in axioms[1:]:
            bits &= a.bits
        return ExtensionalAxiom(domain, bits, name or _combo_name("and", axioms))
    return IntensionalAxiom(
        domain=domain,
        predicate=lambda d: all(a.evaluate(d) for a in axioms),
        requires=_requires_union(axioms),
        needs_outcome_value=any(
            getattr(a, "needs_outcome_value", False) for a in axioms
        ),
        name=name or _combo_name("and", axioms),
    )


def combine_or(*axioms: Axiom, name: str | None = None) -> Axiom:
    """Pointwise maximum: obeys iff some operand obeys."""
    axioms = _flatten(axioms)
    domain = _common_domain(axioms)
    if all(isinstance(a, ExtensionalAxiom) for a in axioms):
        bits = 0
        for a in axioms:
            bits |= a.bits
        return ExtensionalAxiom(domain, bits, name or _combo_name("or", axioms))
    return IntensionalAxiom(
        domain=domain,
        predicate=lambda d: any(a.evaluate(d) for a in axioms),
        requires=_requires_union(axioms),
        needs_outcome_value=any(
            getattr(a, "needs_outcome_value", False) for a in axioms
        ),
        name=name or _combo_name("or", axioms),
    )


def negate(axiom: Axiom, name: str | None = None) -> Axiom:
    """Pointwise complement over the decision space."""
    if isinstance(axiom, ExtensionalAxiom):
        size = axiom.domain.decision_count()
        full = (1 << size) - 1
        return ExtensionalAxiom(
            axiom.domain, axiom.bits ^ full, name or f"not({axiom.name})"
        )
    return IntensionalAxiom(
        domain=axiom.domain,
        predicate=lambda d: not axiom.evaluate(d),
        requires=getattr(axiom, "requires", None),
        needs_outcome_value=getattr(axiom, "needs_outcome_value", False),
        name=name or f"not({axiom.name})",
    )


def _flatten(axioms) -> tuple[Axiom, ...]:
    if len(axioms) == 1 and not isinstance(axioms[0], Axiom):
        return tuple(axioms[0])
    return tuple(axioms)


def _combo_name(op: str, axioms: Sequence[Axiom]) -> str:
    return f"{op}({', '.join(str(a.name) for a in axioms)})"


# -- built-in constructors (the rules-vs-lists contrast) ----------------


def membership_axiom(
    pairs: Iterable[tuple[str, str]],
    domain: DecisionDomain,
    name: str | None = None,
) -> IntensionalAxiom:
    """Obeyed exactly by decisions whose (profile, outcome) pair is listed.

    This is the list-membership axiom: a blackbox axiom usable on any rule
    universe, since the predicate never inspects the rule.
    """
    pair_set = frozenset((str(x), str(y)) for x, y in pairs)
    for x, y in pair_set:
        domain.profiles.index(x)
        domain.outcomes.index(y)
    slices = {
        x: frozenset(y for (px, y) in pair_set if px == x) for x in domain.profiles
    }
    return IntensionalAxiom(
        domain=domain,
        predicate=lambda d: (d.profile, d.outcome) in pair_set,
        requires=frozenset({"profile", "outcome"}),
        name=name or "pair-membership",
        outcome_slices=(
            (lambda x: slices[x]) if domain.rules.kind == "all" else None
        ),
    )


def rule_identity_axiom(
    rule: RuleTable, domain: DecisionDomain, name: str | None = None
) -> IntensionalAxiom:
    """Obeyed exactly by decisions made with one specific rule.

    Rule identity is extensional table equality; labels never matter.
    """
    if not domain.contains_rule(rule):
        raise UnknownIdError("rule", rule.name or rule.mapping)
    return IntensionalAxiom(
        domain=domain,
        predicate=lambda d: d.rule == rule,
        requires=frozenset({"rule"}),
        name=name or f"rule-is({rule.name or 'rule'})",
        outcome_slices=lambda x: frozenset({rule(x)}),
    )
