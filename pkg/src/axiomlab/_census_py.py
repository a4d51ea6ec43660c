"""Pure-Python census kernel.

Sweeps every extensional axiom (one bitmask per axiom) of the full
function space on n profiles and m outcomes, computing class flags,
reduction shape, impossibility, forcing, implied rules and paradox per
axiom, and aggregate counts plus theorem-violation counters.

Encoding: rules are indexed in mixed-radix order (profile 0 is the most
significant digit); decision d = rule * n + profile; an axiom is an
integer whose bit d is 1 iff decision d obeys it. The compiled kernel
(_census_core) implements the same contract; results must be identical
bit for bit.
"""

from __future__ import annotations

KERNEL = "python"

VIOLATION_KEYS = (
    "impasse_implies_arrovian",
    "blackbox_arrovian_iff_impasse",
    "procedural_arrovian_negatively_trivial",
    "forcing_implied_rule_unique_extension",
    "paradox_only_caudal_or_exigent",
)

COUNT_KEYS = (
    "positively_trivial",
    "negatively_trivial",
    "structural",
    "procedural",
    "consequentialist",
    "blackbox",
    "caudal",
    "exigent",
    "impasse",
    "arrovian",
    "forcing",
    "paradox",
)


def _prepare(n: int, m: int):
    if n < 1 or m < 1:
        raise ValueError("need at least one profile and one outcome")
    rules = m**n
    decisions = rules * n
    if decisions > 62:
        raise ValueError(f"kernel domains are limited to 62 decisions, got {decisions}")
    pows = [m ** (n - 1 - k) for k in range(n)]
    digit = [[(r // pows[k]) % m for k in range(n)] for r in range(rules)]

    pair_of = [0] * decisions  # decision -> (profile, outcome) pair index
    for r in range(rules):
        for k in range(n):
            pair_of[r * n + k] = k * m + digit[r][k]

    x_dmask = [0] * n
    y_dmask = [0] * m
    pair_dmask = [0] * (n * m)
    fy_dmask: list[int] = []  # nonempty (rule, outcome) fiber masks
    for r in range(rules):
        per_outcome = [0] * m
        for k in range(n):
            d = r * n + k
            x_dmask[k] |= 1 << d
            y_dmask[digit[r][k]] |= 1 << d
            pair_dmask[pair_of[d]] |= 1 << d
            per_outcome[digit[r][k]] |= 1 << d
        fy_dmask.extend(mask for mask in per_outcome if mask)
    return rules, decisions, pair_of, x_dmask, y_dmask, pair_dmask, fy_dmask


def _axiom_record(a, n, m, rules, decisions, pair_of, x_dmask, y_dmask, pair_dmask, fy_dmask):
    full = (1 << decisions) - 1
    nmask = (1 << n) - 1
    mmask = (1 << m) - 1

    pos_trivial = a == full
    neg_trivial = a == 0

    structural = True
    for mask in x_dmask:
        v = a & mask
        if v and v != mask:
            structural = False
            break
    consequentialist = True
    for mask in y_dmask:
        v = a & mask
        if v and v != mask:
            consequentialist = False
            break
    blackbox = True
    for mask in pair_dmask:
        v = a & mask
        if v and v != mask:
            blackbox = False
            break
    caudal = True
    for mask in fy_dmask:
        v = a & mask
        if v and v != mask:
            caudal = False
            break

    arrovian = True
    procedural = True
    for r in range(rules):
        blk = (a >> (r * n)) & nmask
        if blk == nmask:
            arrovian = False
        elif blk:
            procedural = False

    pairs = 0
    for p in range(n * m):
        if a & pair_dmask[p]:
            pairs |= 1 << p

    impasse = False
    forcing = True
    implied = 0
    for k in range(n):
        s = (pairs >> (k * m)) & mmask
        if s == 0:
            impasse = True
            forcing = False
        elif s & (s - 1):
            forcing = False
        if forcing:
            implied = implied * m + (s.bit_length() - 1)

    extension = 0
    for r in range(rules):
        base = r * n
        member = True
        for k in range(n):
            if not (pairs >> pair_of[base + k]) & 1:
                member = False
                break
        if member:
            extension |= 1 << r

    paradox = forcing and ((a >> (implied * n)) & nmask) != nmask
    exigent = not (
        pos_trivial
        or neg_trivial
        or structural
        or procedural
        or consequentialist
        or blackbox
        or caudal
    )

    return {
        "positively_trivial": pos_trivial,
        "negatively_trivial": neg_trivial,
        "structural": structural,
        "procedural": procedural,
        "consequentialist": consequentialist,
        "blackbox": blackbox,
        "caudal": caudal,
        "exigent": exigent,
        "impasse": impasse,
        "arrovian": arrovian,
        "forcing": forcing,
        "paradox": bool(paradox),
        "pairs_mask": pairs,
        "extension_mask": extension,
        "implied_index": implied if forcing else -1,
    }


def analyze_axiom(n: int, m: int, mask: int) -> dict:
    """Full per-axiom record for one axiom bitmask."""
    rules, decisions, *tables = _prepare(n, m)
    if not 0 <= mask < (1 << decisions):
        raise ValueError("axiom mask out of range")
    return _axiom_record(mask, n, m, rules, decisions, *tables)


def sweep_range(n: int, m: int, start: int, stop: int) -> dict:
    """Aggregate sweep over axiom masks in [start, stop)."""
    rules, decisions, pair_of, x_dmask, y_dmask, pair_dmask, fy_dmask = _prepare(n, m)
    total_axioms = 1 << decisions
    if not (0 <= start <= stop <= total_axioms):
        raise ValueError("mask range out of bounds")

    counts = dict.fromkeys(COUNT_KEYS, 0)
    violations = dict.fromkeys(VIOLATION_KEYS, 0)
    first_violation: dict[str, int | None] = dict.fromkeys(VIOLATION_KEYS, None)

    full = (1 << decisions) - 1
    nmask = (1 << n) - 1
    mmask = (1 << m) - 1
    nm = n * m

    c_pos = c_neg = c_str = c_pro = c_con = c_bb = c_cau = c_exi = 0
    c_imp = c_arr = c_for = c_par = 0

    for a in range(start, stop):
        structural = True
        for mask in x_dmask:
            v = a & mask
            if v and v != mask:
                structural = False
                break
        consequentialist = True
        for mask in y_dmask:
            v = a & mask
            if v and v != mask:
                consequentialist = False
                break
        blackbox = True
        for mask in pair_dmask:
            v = a & mask
            if v and v != mask:
                blackbox = False
                break
        caudal = True
        for mask in fy_dmask:
            v = a & mask
            if v and v != mask:
                caudal = False
                break

        arrovian = True
        procedural = True
        for r in range(rules):
            blk = (a >> (r * n)) & nmask
            if blk == nmask:
                arrovian = False
            elif blk:
                procedural = False

        pairs = 0
        for p in range(nm):
            if a & pair_dmask[p]:
                pairs |= 1 << p

        impasse = False
        forcing = True
        implied = 0
        for k in range(n):
            s = (pairs >> (k * m)) & mmask
            if s == 0:
                impasse = True
                forcing = False
            elif s & (s - 1):
                forcing = False
            if forcing:
                implied = implied * m + (s.bit_length() - 1)

        extension = 0
        for r in range(rules):
            base = r * n
            member = True
            for k in range(n):
                if not (pairs >> pair_of[base + k]) & 1:
                    member = False
                    break
            if member:
                extension |= 1 << r

        paradox = forcing and ((a >> (implied * n)) & nmask) != nmask
        pos_trivial = a == full
        neg_trivial = a == 0
        exigent = not (
            pos_trivial
            or neg_trivial
            or structural
            or procedural
            or consequentialist
            or blackbox
            or caudal
        )

        c_pos += pos_trivial
        c_neg += neg_trivial
        c_str += structural
        c_pro += procedural
        c_con += consequentialist
        c_bb += blackbox
        c_cau += caudal
        c_exi += exigent
        c_imp += impasse
        c_arr += arrovian
        c_for += forcing
        c_par += paradox

        if impasse and not arrovian:
            violations["impasse_implies_arrovian"] += 1
            if first_violation["impasse_implies_arrovian"] is None:
                first_violation["impasse_implies_arrovian"] = a
        if blackbox and (arrovian != impasse):
            violations["blackbox_arrovian_iff_impasse"] += 1
            if first_violation["blackbox_arrovian_iff_impasse"] is None:
                first_violation["blackbox_arrovian_iff_impasse"] = a
        if procedural and arrovian and a != 0:
            violations["procedural_arrovian_negatively_trivial"] += 1
            if first_violation["procedural_arrovian_negatively_trivial"] is None:
                first_violation["procedural_arrovian_negatively_trivial"] = a
        if forcing and extension != (1 << implied):
            violations["forcing_implied_rule_unique_extension"] += 1
            if first_violation["forcing_implied_rule_unique_extension"] is None:
                first_violation["forcing_implied_rule_unique_extension"] = a
        if paradox and not (caudal or exigent):
            violations["paradox_only_caudal_or_exigent"] += 1
            if first_violation["paradox_only_caudal_or_exigent"] is None:
                first_violation["paradox_only_caudal_or_exigent"] = a

    counts.update(
        positively_trivial=c_pos,
        negatively_trivial=c_neg,
        structural=c_str,
        procedural=c_pro,
        consequentialist=c_con,
        blackbox=c_bb,
        caudal=c_cau,
        exigent=c_exi,
        impasse=c_imp,
        arrovian=c_arr,
        forcing=c_for,
        paradox=c_par,
    )
    return {
        "n": n,
        "m": m,
        "rules": rules,
        "decisions": decisions,
        "start": start,
        "stop": stop,
        "total": stop - start,
        "counts": counts,
        "violations": violations,
        "first_violation": first_violation,
    }
