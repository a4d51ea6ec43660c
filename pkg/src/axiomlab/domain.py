"""Finite decision domains: profile/outcome spaces, rule universes, decisions.

A decision is a triple (profile, rule, outcome) with ``rule(profile) ==
outcome``; triples violating that are unrepresentable (the Decision
constructor rejects them). Rule universes are either the full function
space outcome^profiles, an explicit set of tables, or a registered named
family. Enumeration orders are deterministic: the full function space is
enumerated in mixed-radix order over the outcome order, so rule index
digit k is the outcome index assigned to profile k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterator, Mapping, Sequence

from .errors import (
    CapExceededError,
    DomainMismatchError,
    InvalidDecisionError,
    InvalidParameterError,
    UnknownIdError,
)

DEFAULT_CAP = 10_000_000

# Rule-count threshold above which reports print "astronomical" instead of
# the (still exact) integer.
ASTRONOMICAL = 10**18


def _unique(ids: Sequence[str], kind: str) -> tuple[str, ...]:
    out = tuple(str(i) for i in ids)
    if not out:
        raise InvalidParameterError(f"{kind} space must be non-empty")
    if len(set(out)) != len(out):
        raise InvalidParameterError(f"{kind} ids must be unique")
    return out


@dataclass(frozen=True)
class ProfileSpace:
    """Ordered finite set of opaque profile ids; iteration order is stable."""

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", _unique(self.elements, "profile"))
        object.__setattr__(
            self, "_index", {p: i for i, p in enumerate(self.elements)}
        )

    def index(self, profile: str) -> int:
        try:
            return self._index[profile]
        except KeyError:
            raise UnknownIdError("profile", profile) from None

    def __contains__(self, profile) -> bool:
        return profile in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class OutcomeSpace:
    """Ordered finite set of opaque outcome ids; iteration order is stable."""

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", _unique(self.elements, "outcome"))
        object.__setattr__(
            self, "_index", {y: i for i, y in enumerate(self.elements)}
        )

    def index(self, outcome: str) -> int:
        try:
            return self._index[outcome]
        except KeyError:
            raise UnknownIdError("outcome", outcome) from None

    def __contains__(self, outcome) -> bool:
        return outcome in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


class RuleTable:
    """A total function profile id -> outcome id, stored as an explicit table.

    Equality and hashing are extensional (the mapping only); ``name`` is a
    display label and never participates in identity. The hash is
    precomputed so that comparing large unequal tables is O(1).
    """

    __slots__ = ("_map", "_items", "_hash", "name")

    def __init__(self, mapping: Mapping[str, str], name: str | None = None):
        m = {str(k): str(v) for k, v in mapping.items()}
        if not m:
            raise InvalidParameterError("rule table must be non-empty")
        self._map = m
        self._items = tuple(sorted(m.items()))
        self._hash = hash(self._items)
        self.name = name

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self._map)

    def domain_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self._map))

    def __call__(self, profile: str) -> str:
        try:
            return self._map[profile]
        except KeyError:
            raise UnknownIdError("profile", profile) from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RuleTable):
            return NotImplemented
        if self._hash != other._hash:
            return False
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        label = self.name or f"rule[{len(self._map)} profiles]"
        return f"RuleTable({label})"


def apply(rule: RuleTable, profile: str) -> str:
    """Apply a rule to a profile. Pure; raises unknown-profile if outside."""
    return rule(profile)


@dataclass(frozen=True)
class Decision:
    """A validated (profile, rule, outcome) triple with rule(profile)==outcome.

    The constructor enforces the consistency invariant, so inconsistent
    triples are unrepresentable.
    """

    profile: str
    rule: RuleTable
    outcome: str

    def __post_init__(self):
        if self.rule(self.profile) != self.outcome:
            raise InvalidDecisionError(
                f"({self.profile!r}, {self.rule!r}, {self.outcome!r}) is not a "
                f"decision: rule maps {self.profile!r} to "
                f"{self.rule(self.profile)!r}"
            )

    def triple(self) -> tuple[str, str | None, str]:
        return (self.profile, self.rule.name, self.outcome)


# Registry of named rule families: name -> builder(profiles, outcomes, params).
_FAMILY_REGISTRY: dict[str, Callable[..., Sequence[RuleTable]]] = {}


def register_rule_family(name: str, builder: Callable[..., Sequence[RuleTable]]):
    _FAMILY_REGISTRY[name] = builder


def _constant_family(
    profiles: ProfileSpace, outcomes: OutcomeSpace, params: Mapping[str, Any]
) -> list[RuleTable]:
    return [
        RuleTable({p: y for p in profiles}, name=f"constant({y})") for y in outcomes
    ]


register_rule_family("constant", _constant_family)


@dataclass(frozen=True)
class RuleUniverse:
    """The rule space: all functions, an explicit set, or a named family."""

    kind: str  # "all" | "explicit" | "family"
    explicit: tuple[RuleTable, ...] = ()
    family: str | None = None
    family_params: tuple[tuple[str, Any], ...] = ()

    def __post_init__(self):
        if self.kind not in ("all", "explicit", "family"):
            raise InvalidParameterError(f"unknown rule universe kind {self.kind!r}")
        if self.kind == "family" and self.family not in _FAMILY_REGISTRY:
            raise InvalidParameterError(f"unknown rule family {self.family!r}")

    @classmethod
    def all_functions(cls) -> "RuleUniverse":
        return cls(kind="all")

    @classmethod
    def explicit_set(cls, rules: Sequence[RuleTable]) -> "RuleUniverse":
        rules = tuple(rules)
        if len(set(rules)) != len(rules):
            raise InvalidParameterError(
                "explicit rule sets must be pairwise distinct as functions"
            )
        return cls(kind="explicit", explicit=rules)

    @classmethod
    def named_family(cls, name: str, **params) -> "RuleUniverse":
        return cls(
            kind="family", family=name, family_params=tuple(sorted(params.items()))
        )


@dataclass(frozen=True)
class DecisionDomain:
    """Profile space x outcome space x rule universe.

    ``candidate_rules`` are optional witness hints consulted by the
    impossibility search on universes too large to enumerate; they carry no
    semantic weight.
    """

    profiles: ProfileSpace
    outcomes: OutcomeSpace
    rules: RuleUniverse
    name: str | None = None
    candidate_rules: tuple[RuleTable, ...] = ()

    # -- rule universe -------------------------------------------------

    @cached_property
    def _family_rules(self) -> tuple[RuleTable, ...]:
        builder = _FAMILY_REGISTRY[self.rules.family]
        rules = tuple(builder(self.profiles, self.outcomes, dict(self.rules.family_params)))
        if len(set(rules)) != len(rules):
            raise InvalidParameterError(
                f"rule family {self.rules.family!r} produced duplicate tables"
            )
        return rules

    def _explicit_rules(self) -> tuple[RuleTable, ...]:
        if self.rules.kind == "explicit":
            return self.rules.explicit
        return self._family_rules

    @cached_property
    def _explicit_index(self) -> dict[RuleTable, int]:
        return {r: i for i, r in enumerate(self._explicit_rules())}

    def rule_count(self) -> int:
        """Exact number of rules in the universe (may be astronomical)."""
        if self.rules.kind == "all":
            return len(self.outcomes) ** len(self.profiles)
        return len(self._explicit_rules())

    def _check_total(self, rule: RuleTable) -> bool:
        m = rule._map
        return len(m) == len(self.profiles) and all(
            p in m and m[p] in self.outcomes for p in self.profiles
        )

    def contains_rule(self, rule: RuleTable) -> bool:
        if self.rules.kind == "all":
            return self._check_total(rule)
        return rule in self._explicit_index

    def rule_index(self, rule: RuleTable) -> int:
        """Canonical index of a rule; mixed-radix digits for the full space."""
        if self.rules.kind == "all":
            if not self._check_total(rule):
                raise UnknownIdError("rule", rule.name or rule.mapping)
            m = len(self.outcomes)
            idx = 0
            for p in self.profiles:
                idx = idx * m + self.outcomes.index(rule(p))
            return idx
        try:
            return self._explicit_index[rule]
        except KeyError:
            raise UnknownIdError("rule", rule.name or rule.mapping) from None

    def rule_at(self, index: int) -> RuleTable:
        if self.rules.kind == "all":
            n, m = len(self.profiles), len(self.outcomes)
            if not 0 <= index < m**n:
                raise UnknownIdError("rule", index)
            digits = []
            rem = index
            for _ in range(n):
                rem, d = divmod(rem, m)
                digits.append(d)
            digits.reverse()
            mapping = {
                p: self.outcomes.elements[d] for p, d in zip(self.profiles, digits)
            }
            return RuleTable(mapping, name=f"f{index + 1}")
        rules = self._explicit_rules()
        if not 0 <= index < len(rules):
            raise UnknownIdError("rule", index)
        return rules[index]

    def enumerate_rules(self, cap: int = DEFAULT_CAP) -> Iterator[RuleTable]:
        """Yield every rule exactly once, in stable index order.

        The cap is checked eagerly, before the first rule is produced.
        """
        count = self.rule_count()
        if count > cap:
            raise CapExceededError(count, cap, what="rules")

        def _gen():
            if self.rules.kind == "all":
                n = len(self.profiles)
                outs = self.outcomes.elements
                for index, digits in enumerate(
                    itertools.product(range(len(outs)), repeat=n)
                ):
                    mapping = {p: outs[d] for p, d in zip(self.profiles, digits)}
                    yield RuleTable(mapping, name=f"f{index + 1}")
            else:
                yield from self._explicit_rules()

        return _gen()

    # -- decisions -----------------------------------------------------

    def decision_count(self) -> int:
        return len(self.profiles) * self.rule_count()

    def make_decision(self, profile: str, rule: RuleTable) -> Decision:
        """The only constructor path for decisions: (x, f, f(x))."""
        self.profiles.index(profile)
        if not self.contains_rule(rule):
            raise DomainMismatchError(
                f"rule {rule.name or rule.mapping!r} is not in the rule universe"
            )
        return Decision(profile, rule, rule(profile))

    def is_decision(self, profile: str, rule: RuleTable, outcome: str) -> bool:
        self.profiles.index(profile)
        self.outcomes.index(outcome)
        if not self.contains_rule(rule):
            raise UnknownIdError("rule", rule.name or rule.mapping)
        return rule(profile) == outcome

    def decision_index(self, decision: Decision) -> int:
        """Stable index: rule-major, profiles fastest."""
        r = self.rule_index(decision.rule)
        k = self.profiles.index(decision.profile)
        self.outcomes.index(decision.outcome)
        return r * len(self.profiles) + k

    def decision_at(self, index: int) -> Decision:
        n = len(self.profiles)
        r, k = divmod(index, n)
        rule = self.rule_at(r)
        profile = self.profiles.elements[k]
        return Decision(profile, rule, rule(profile))

    def enumerate_decisions(self, cap: int = DEFAULT_CAP) -> Iterator[Decision]:
        """Yield all |profiles| * |rules| decisions in stable index order."""
        count = self.decision_count()
        if count > cap:
            raise CapExceededError(count, cap, what="decisions")

        def _gen():
            for rule in self.enumerate_rules(count):
                for profile in self.profiles:
                    yield Decision(profile, rule, rule(profile))

        return _gen()


def make_domain(
    profiles: Sequence[str],
    outcomes: Sequence[str],
    rules: RuleUniverse | None = None,
    name: str | None = None,
    candidate_rules: Sequence[RuleTable] = (),
) -> DecisionDomain:
    return DecisionDomain(
        profiles=ProfileSpace(tuple(profiles)),
        outcomes=OutcomeSpace(tuple(outcomes)),
        rules=rules or RuleUniverse.all_functions(),
        name=name,
        candidate_rules=tuple(candidate_rules),
    )
