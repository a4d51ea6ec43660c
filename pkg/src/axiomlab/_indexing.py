"""Internal helpers for O(1) decision-index arithmetic on enumerated domains.

Decision index d encodes (rule r, profile k) as d = r * n_profiles + k.
"""

from __future__ import annotations

from .domain import DecisionDomain


def outcome_index_fn(domain: DecisionDomain):
    """Return ``out_idx(d)``: the outcome index of decision ``d``, O(1).

    For the full function space the outcome is the k-th mixed-radix digit
    of the rule index; explicit universes precompute their outcome rows.
    """
    n, m = len(domain.profiles), len(domain.outcomes)
    if domain.rules.kind == "all":
        pows = [m ** (n - 1 - k) for k in range(n)]

        def out_idx(d: int) -> int:
            r, k = divmod(d, n)
            return (r // pows[k]) % m

        return out_idx

    rows = []
    for rule in domain.enumerate_rules():
        rows.append(tuple(domain.outcomes.index(rule(p)) for p in domain.profiles))

    def out_idx(d: int) -> int:
        r, k = divmod(d, n)
        return rows[r][k]

    return out_idx


def bit_buffer(bits: int, size: int) -> bytes:
    """Little-endian packed bits; bit d is ``(buf[d >> 3] >> (d & 7)) & 1``."""
    return bits.to_bytes((size + 7) // 8 or 1, "little")
