"""Census sweeps over every extensional axiom of a small domain.

The per-axiom inner loop dominates the runtime of theorem sweeps (the
2-profile/3-outcome domain already has 262144 axioms), so it lives in a
kernel with two interchangeable implementations: a compiled Cython core
and a pure-Python fallback, selected at import. Both obey one contract
and are cross-checked in the test suite; ``benchmarks/bench_census.py``
compares their throughput.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _census_py
from .domain import DEFAULT_CAP
from .errors import CapExceededError, InvalidParameterError

try:  # pragma: no cover - presence depends on the build
    from . import _census_core  # type: ignore[attr-defined]

    _DEFAULT_KERNEL = _census_core
except ImportError:  # pragma: no cover
    _census_core = None
    _DEFAULT_KERNEL = _census_py

BACKEND = _DEFAULT_KERNEL.KERNEL

VIOLATION_KEYS = _census_py.VIOLATION_KEYS
COUNT_KEYS = _census_py.COUNT_KEYS


def available_backends() -> tuple[str, ...]:
    return ("python",) if _census_core is None else ("compiled", "python")


def _kernel(backend: str | None):
    if backend in (None, "auto"):
        return _DEFAULT_KERNEL
    if backend == "python":
        return _census_py
    if backend == "compiled":
        if _census_core is None:
            raise InvalidParameterError("compiled census kernel is not built")
        return _census_core
    raise InvalidParameterError(f"unknown census backend {backend!r}")


@dataclass(frozen=True)
class CensusResult:
    n: int
    m: int
    rules: int
    decisions: int
    start: int
    stop: int
    backend: str
    counts: dict
    violations: dict
    first_violation: dict

    @property
    def clean(self) -> bool:
        return all(v == 0 for v in self.violations.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "rules": self.rules,
            "decisions": self.decisions,
            "axioms": self.stop - self.start,
            "backend": self.backend,
            "counts": dict(self.counts),
            "violations": dict(self.violations),
            "first_violation": dict(self.first_violation),
        }


def domain_size(n: int, m: int) -> tuple[int, int, int]:
    """(rules, decisions, axioms) for the full function space on (n, m)."""
    rules = m**n
    decisions = rules * n
    return rules, decisions, 1 << decisions


def run_census(
    n: int,
    m: int,
    cap: int = DEFAULT_CAP,
    backend: str | None = None,
    start: int = 0,
    stop: int | None = None,
) -> CensusResult:
    """Sweep axiom masks [start, stop) of the (n, m) full function space."""
    if n < 1 or m < 1:
        raise InvalidParameterError("need at least one profile and one outcome")
    rules, decisions, axioms = domain_size(n, m)
    if decisions > 62:
        raise CapExceededError(axioms, cap, what="axioms")
    if stop is None:
        stop = axioms
    if not (0 <= start <= stop <= axioms):
        raise InvalidParameterError("mask range out of bounds")
    if stop - start > cap:
        raise CapExceededError(stop - start, cap, what="axioms")
    kernel = _kernel(backend)
    raw = kernel.sweep_range(n, m, start, stop)
    return CensusResult(
        n=n,
        m=m,
        rules=raw["rules"],
        decisions=raw["decisions"],
        start=start,
        stop=stop,
        backend=kernel.KERNEL,
        counts=raw["counts"],
        violations=raw["violations"],
        first_violation=raw["first_violation"],
    )


def analyze_axiom(n: int, m: int, mask: int, backend: str | None = None) -> dict:
    """Per-axiom record (class flags, reduction shape, forcing, paradox)."""
    return _kernel(backend).analyze_axiom(n, m, mask)
