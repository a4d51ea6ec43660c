"""Blackbox reduction, procedural extension, impossibility and forcing.

The reduction of an axiom projects its obeying decisions onto their
(profile, outcome) pairs; it is unique per axiom and underlies extensional
equivalence, impasse detection, forcing, implied rules and the
decision-evaluation paradox report.

Reduction of an intensional axiom over a rule universe too large to
enumerate uses, in order of preference: constant-rule probing when the
axiom only reads (profile, outcome) -- sound because a blackbox predicate
gives the same answer for every rule realizing the pair -- or the axiom's
declared ``outcome_slices`` metadata. Enumeration is always preferred when
it fits under the cap, and the declared slices are cross-checked against
it in that case.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from ._indexing import bit_buffer, outcome_index_fn
from .axioms import Axiom, ExtensionalAxiom, IntensionalAxiom, evaluate
from .domain import DEFAULT_CAP, Decision, DecisionDomain, RuleTable
from .errors import (
    CapExceededError,
    DomainMismatchError,
    ImpliedRuleUnavailableError,
    InvalidParameterError,
    NotForcingError,
)


@dataclass(frozen=True)
class BlackboxList:
    """A set B of (profile, outcome) pairs characterizing a blackbox axiom."""

    domain: DecisionDomain
    pairs: frozenset[tuple[str, str]]

    def __post_init__(self):
        for x, y in self.pairs:
            self.domain.profiles.index(x)
            self.domain.outcomes.index(y)

    def slice_at(self, profile: str) -> frozenset[str]:
        """Y_x: the outcomes paired with ``profile``."""
        self.domain.profiles.index(profile)
        return frozenset(y for (x, y) in self.pairs if x == profile)

    def impasses(self) -> tuple[str, ...]:
        """Profiles whose slice is empty, in profile order."""
        present = {x for (x, _) in self.pairs}
        return tuple(x for x in self.domain.profiles if x not in present)

    def is_implementable(self) -> bool:
        return not self.impasses()

    def is_forcing_shape(self) -> bool:
        """Exactly one outcome per profile."""
        if not self.is_implementable():
            return False
        counts: dict[str, int] = {}
        for x, _ in self.pairs:
            counts[x] = counts.get(x, 0) + 1
        return all(c == 1 for c in counts.values())

    def sorted_pairs(self) -> tuple[tuple[str, str], ...]:
        xi = self.domain.profiles.index
        yi = self.domain.outcomes.index
        return tuple(sorted(self.pairs, key=lambda p: (xi(p[0]), yi(p[1]))))

    def as_axiom(self, name: str | None = None) -> IntensionalAxiom:
        """The blackbox axiom characterized by B."""
        pairs = self.pairs
        slices = {x: self.slice_at(x) for x in self.domain.profiles}
        return IntensionalAxiom(
            domain=self.domain,
            predicate=lambda d: (d.profile, d.outcome) in pairs,
            requires=frozenset({"profile", "outcome"}),
            name=name or "blackbox",
            # The slice metadata restates B itself; valid on the full
            # function space where every pair is realized by some rule.
            outcome_slices=(
                (lambda x: slices[x]) if self.domain.rules.kind == "all" else None
            ),
        )


def _is_declared_blackbox(axiom: Axiom) -> bool:
    return (
        isinstance(axiom, IntensionalAxiom)
        and axiom.requires is not None
        and axiom.requires <= {"profile", "outcome"}
    )


def _reduce_by_enumeration(axiom: Axiom, cap: int) -> BlackboxList:
    dom = axiom.domain
    size = dom.decision_count()
    if size > cap:
        raise CapExceededError(size, cap, what="decisions")
    out_idx = outcome_index_fn(dom)
    n = len(dom.profiles)
    pairs: set[tuple[str, str]] = set()
    if isinstance(axiom, ExtensionalAxiom):
        buf = bit_buffer(axiom.bits, size)
        for d in range(size):
            if (buf[d >> 3] >> (d & 7)) & 1:
                pairs.add(
                    (dom.profiles.elements[d % n], dom.outcomes.elements[out_idx(d)])
                )
    else:
        for decision in dom.enumerate_decisions(cap):
            if axiom.evaluate(decision):
                pairs.add((decision.profile, decision.outcome))
    return BlackboxList(domain=dom, pairs=frozenset(pairs))


def _reduce_by_probing(axiom: IntensionalAxiom) -> BlackboxList:
    # Sound only for declared-blackbox axioms on the full function space:
    # the constant rule realizes (x, y), and the predicate cannot depend on
    # which rule realized the pair.
    dom = axiom.domain
    pairs = set()
    for y in dom.outcomes:
        const = RuleTable({p: y for p in dom.profiles}, name=f"constant({y})")
        for x in dom.profiles:
            if axiom.evaluate(Decision(x, const, y)):
                pairs.add((x, y))
    return BlackboxList(domain=dom, pairs=frozenset(pairs))


def _reduce_by_slices(axiom: IntensionalAxiom) -> BlackboxList:
    dom = axiom.domain
    pairs = set()
    for x in dom.profiles:
        for y in axiom.outcome_slices(x):
            dom.outcomes.index(y)
            pairs.add((x, y))
    return BlackboxList(domain=dom, pairs=frozenset(pairs))


@lru_cache(maxsize=256)
def _reduce_cached(axiom: Axiom, cap: int) -> BlackboxList:
    dom = axiom.domain
    if dom.decision_count() <= cap:
        reduced = _reduce_by_enumeration(axiom, cap)
        if isinstance(axiom, IntensionalAxiom) and axiom.outcome_slices is not None:
            declared = _reduce_by_slices(axiom)
            if declared.pairs != reduced.pairs:
                raise InvalidParameterError(
                    f"axiom {axiom.name!r}: declared outcome slices disagree "
                    f"with enumeration"
                )
        return reduced
    if isinstance(axiom, IntensionalAxiom):
        if _is_declared_blackbox(axiom) and dom.rules.kind == "all":
            return _reduce_by_probing(axiom)
        if axiom.outcome_slices is not None:
            return _reduce_by_slices(axiom)
    raise CapExceededError(dom.decision_count(), cap, what="decisions")


def reduce_to_blackbox(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> BlackboxList:
    """Project the axiom's obeying decisions to their (profile, outcome) pairs."""
    _check_domain(axiom, domain)
    return _reduce_cached(axiom, cap)


def extensionally_equivalent(
    a1: Axiom,
    a2: Axiom,
    domain: DecisionDomain | None = None,
    cap: int = DEFAULT_CAP,
) -> bool:
    """True iff both axioms reduce to the same blackbox list."""
    _check_domain(a1, domain)
    _check_domain(a2, domain)
    if a1.domain != a2.domain:
        raise DomainMismatchError("axioms live on different domains")
    return reduce_to_blackbox(a1, cap=cap).pairs == reduce_to_blackbox(a2, cap=cap).pairs


@dataclass(frozen=True)
class ProceduralExtension:
    """The rule set F = {f : for all x, (x, f(x)) in B}, predicate-first.

    Membership of a given rule is O(|profiles|); explicit listing is gated
    by the cap. On the full function space the size has the closed form
    prod_x |Y_x|.
    """

    blackbox: BlackboxList

    @property
    def domain(self) -> DecisionDomain:
        return self.blackbox.domain

    def contains(self, rule: RuleTable) -> bool:
        if not self.domain.contains_rule(rule):
            return False
        pairs = self.blackbox.pairs
        return all((x, rule(x)) in pairs for x in self.domain.profiles)

    def count(self, cap: int = DEFAULT_CAP) -> int:
        """Exact |F| (may be astronomical on the full function space)."""
        if self.domain.rules.kind == "all":
            return math.prod(
                len(self.blackbox.slice_at(x)) for x in self.domain.profiles
            )
        return sum(1 for _ in self.rules(cap))

    def rules(self, cap: int = DEFAULT_CAP) -> Iterator[RuleTable]:
        """All member rules in the universe's stable order; cap-gated.

        On the full function space members are generated directly as the
        product of the per-profile slices, so a small extension is
        listable even when the universe is astronomical.
        """
        dom = self.domain
        if dom.rules.kind == "all":
            total = self.count()
            if total > cap:
                raise CapExceededError(total, cap, what="extension rules")
            slices = [
                sorted(self.blackbox.slice_at(x), key=dom.outcomes.index)
                for x in dom.profiles
            ]
            profiles = dom.profiles.elements

            def _gen():
                for combo in itertools.product(*slices):
                    mapping = dict(zip(profiles, combo))
                    index = dom.rule_index(RuleTable(mapping))
                    yield RuleTable(mapping, name=f"f{index + 1}")

            return _gen()
        return (r for r in dom.enumerate_rules(cap) if self.contains(r))

    def is_empty(self) -> bool:
        if self.domain.rules.kind == "all":
            return not self.blackbox.is_implementable()
        return next(iter(self.rules()), None) is None

    def as_axiom(self, name: str | None = None) -> IntensionalAxiom:
        """The procedural axiom characterized by F."""
        pairs = self.blackbox.pairs
        implementable = self.blackbox.is_implementable()
        slices = {x: self.blackbox.slice_at(x) for x in self.domain.profiles}
        return IntensionalAxiom(
            domain=self.domain,
            predicate=lambda d: all(
                (x, d.rule(x)) in pairs for x in self.domain.profiles
            ),
            requires=frozenset({"rule"}),
            name=name or "procedural-extension",
            # An implementable B is exactly recovered by reducing its
            # extension on the full function space; otherwise F is empty
            # and the slices would misstate the (empty) reduction.
            outcome_slices=(
                (lambda x: slices[x])
                if implementable and self.domain.rules.kind == "all"
                else None
            ),
        )


def procedural_extension(
    source: Axiom | BlackboxList,
    domain: DecisionDomain | None = None,
    cap: int = DEFAULT_CAP,
) -> ProceduralExtension:
    """Extension of an axiom (via its reduction) or of a blackbox list."""
    if isinstance(source, BlackboxList):
        if domain is not None and domain != source.domain:
            raise DomainMismatchError("blackbox list belongs to a different domain")
        return ProceduralExtension(blackbox=source)
    return ProceduralExtension(blackbox=reduce_to_blackbox(source, domain, cap))


def find_impasses(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> tuple[str, ...]:
    """Profiles where no rule can produce an obeying decision."""
    return reduce_to_blackbox(axiom, domain, cap).impasses()


@dataclass(frozen=True)
class ImpossibilityVerdict:
    """Tri-state impossibility answer with the method that produced it.

    Any discovered impasse forces ``arrovian == "yes"``. Blackbox axioms
    are always decided exactly (impossibility and impasse coincide for
    them); other axioms over non-enumerable universes may come back
    "unknown", which is a value, not an error.
    """

    arrovian: str  # "yes" | "no" | "unknown"
    impasses: tuple[str, ...]
    method: str  # "rule-enumeration" | "blackbox-shortcut" | "witness-rule" | "inconclusive"
    witness: RuleTable | None = None


def _satisfies_everywhere(axiom: Axiom, rule: RuleTable) -> bool:
    dom = axiom.domain
    return all(
        axiom.evaluate(Decision(x, rule, rule(x))) for x in dom.profiles
    )


def is_arrovian(
    axiom: Axiom,
    domain: DecisionDomain | None = None,
    cap: int = DEFAULT_CAP,
    witnesses: tuple[RuleTable, ...] = (),
) -> ImpossibilityVerdict:
    """Decide whether no single rule obeys the axiom on every profile."""
    _check_domain(axiom, domain)
    dom = axiom.domain

    if dom.rule_count() <= cap:
        obeying_profiles: set[str] = set()
        satisfying: RuleTable | None = None
        for rule in dom.enumerate_rules(cap):
            all_ok = True
            for x in dom.profiles:
                if axiom.evaluate(Decision(x, rule, rule(x))):
                    obeying_profiles.add(x)
                else:
                    all_ok = False
            if all_ok and satisfying is None:
                satisfying = rule
        impasses = tuple(x for x in dom.profiles if x not in obeying_profiles)
        return ImpossibilityVerdict(
            arrovian="no" if satisfying is not None else "yes",
            impasses=impasses,
            method="rule-enumeration",
            witness=satisfying,
        )

    if _is_declared_blackbox(axiom) and dom.rules.kind == "all":
        reduced = _reduce_by_probing(axiom)
        impasses = reduced.impasses()
        if impasses:
            return ImpossibilityVerdict("yes", impasses, "blackbox-shortcut")
        # Implementable blackbox: any selector through the slices satisfies.
        table = {x: min(reduced.slice_at(x), key=dom.outcomes.index) for x in dom.profiles}
        return ImpossibilityVerdict(
            "no", (), "blackbox-shortcut", witness=RuleTable(table, name="selector")
        )

    declared_impasses: tuple[str, ...] = ()
    if isinstance(axiom, IntensionalAxiom) and axiom.outcome_slices is not None:
        declared_impasses = _reduce_by_slices(axiom).impasses()
        if declared_impasses:
            # Impasse implies impossibility for every axiom class.
            return ImpossibilityVerdict("yes", declared_impasses, "blackbox-shortcut")

    candidates = tuple(witnesses) + dom.candidate_rules
    if dom.rules.kind == "all":
        candidates = candidates + tuple(
            RuleTable({p: y for p in dom.profiles}, name=f"constant({y})")
            for y in dom.outcomes
        )
    for rule in candidates:
        if dom.contains_rule(rule) and _satisfies_everywhere(axiom, rule):
            return ImpossibilityVerdict(
                "no", declared_impasses, "witness-rule", witness=rule
            )

    return ImpossibilityVerdict("unknown", declared_impasses, "inconclusive")


def is_forcing(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> bool:
    """Implementable with exactly one permitted outcome per profile."""
    return reduce_to_blackbox(axiom, domain, cap).is_forcing_shape()


def forced_outcome(
    axiom: Axiom,
    profile: str,
    domain: DecisionDomain | None = None,
    cap: int = DEFAULT_CAP,
) -> str:
    """The unique outcome the axiom permits at ``profile``."""
    reduced = reduce_to_blackbox(axiom, domain, cap)
    ys = reduced.slice_at(profile)
    if len(ys) != 1:
        raise NotForcingError(
            f"axiom {axiom.name!r} permits {len(ys)} outcomes at {profile!r}, not 1"
        )
    return next(iter(ys))


def implied_rule(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> RuleTable:
    """The rule a forcing axiom implies: x -> its forced outcome.

    Equals the unique member of the axiom's procedural extension. On the
    full function space the table is always a universe member; explicit
    universes may lack it, which is reported as a distinct error.
    """
    reduced = reduce_to_blackbox(axiom, domain, cap)
    if not reduced.is_forcing_shape():
        raise NotForcingError(
            f"axiom {axiom.name!r} is not forcing; no implied rule exists"
        )
    dom = reduced.domain
    table = {x: next(iter(reduced.slice_at(x))) for x in dom.profiles}
    rule = RuleTable(table)
    if not dom.contains_rule(rule):
        raise ImpliedRuleUnavailableError(
            "the forced table is not a member of the explicit rule universe"
        )
    count = dom.rule_count()
    name = f"f{dom.rule_index(rule) + 1}" if count <= DEFAULT_CAP else "implied"
    return RuleTable(table, name=name)


@dataclass(frozen=True)
class ParadoxReport:
    """Outcome of driving a forcing axiom by its own implied rule."""

    axiom_name: str | None
    implied: RuleTable
    violating_profiles: tuple[str, ...]

    @property
    def paradox(self) -> bool:
        return bool(self.violating_profiles)


def detect_paradox(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> ParadoxReport:
    """Evaluate the axiom on every decision its implied rule makes."""
    rule = implied_rule(axiom, domain, cap)
    dom = axiom.domain
    violating = tuple(
        x for x in dom.profiles if not axiom.evaluate(Decision(x, rule, rule(x)))
    )
    return ParadoxReport(
        axiom_name=axiom.name, implied=rule, violating_profiles=violating
    )


@dataclass(frozen=True)
class GeneralParadoxReport:
    """Per-rule violation sets across the whole procedural extension."""

    axiom_name: str | None
    violations: tuple[tuple[str, tuple[str, ...]], ...]  # (rule name, profiles)

    @property
    def paradox(self) -> bool:
        return bool(self.violations) and all(v for _, v in self.violations)


def detect_paradox_general(
    axiom: Axiom, domain: DecisionDomain | None = None, cap: int = DEFAULT_CAP
) -> GeneralParadoxReport:
    """Paradox check generalized past forcing: every extension rule violates
    the axiom somewhere.

    Requires an implementable axiom and a listable extension.
    """
    ext = procedural_extension(axiom, domain, cap)
    if not ext.blackbox.is_implementable():
        raise InvalidParameterError(
            "generalized paradox is defined for implementable axioms only"
        )
    rows = []
    for rule in ext.rules(cap):
        dom = axiom.domain
        bad = tuple(
            x for x in dom.profiles if not axiom.evaluate(Decision(x, rule, rule(x)))
        )
        rows.append((rule.name or f"f{dom.rule_index(rule) + 1}", bad))
    return GeneralParadoxReport(axiom_name=axiom.name, violations=tuple(rows))


def _check_domain(axiom: Axiom, domain: DecisionDomain | None):
    if domain is not None and domain != axiom.domain:
        raise DomainMismatchError("axiom belongs to a different domain")
