"""axiomlab: finite-domain analysis of decision axioms.

Decisions are (profile, rule, outcome) triples with rule(profile) ==
outcome; axioms are total 0/1 evaluators over them. The package
classifies axioms by partition structure, reduces them to blackbox lists,
derives procedural extensions and implied rules, detects impasses,
Arrovian impossibilities and the decision-evaluation paradox, and audits
transparency and deception, with a voting instantiation.
"""

from .axioms import (
    Axiom,
    ExtensionalAxiom,
    IntensionalAxiom,
    characterizing_list,
    combine_and,
    combine_or,
    evaluate,
    from_decision_list,
    materialize,
    membership_axiom,
    negate,
    rule_identity_axiom,
)
from .calculus import (
    BlackboxList,
    GeneralParadoxReport,
    ImpossibilityVerdict,
    ParadoxReport,
    ProceduralExtension,
    detect_paradox,
    detect_paradox_general,
    extensionally_equivalent,
    find_impasses,
    forced_outcome,
    implied_rule,
    is_arrovian,
    is_forcing,
    procedural_extension,
    reduce_to_blackbox,
)
from .domain import (
    DEFAULT_CAP,
    Decision,
    DecisionDomain,
    OutcomeSpace,
    ProfileSpace,
    RuleTable,
    RuleUniverse,
    apply,
    make_domain,
    register_rule_family,
)
from .errors import AxiomlabError
from .taxonomy import ClassSet, classify, is_trivial

__version__ = "0.1.0"
