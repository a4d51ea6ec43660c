# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; contract-identical to axiomlab._census_py.

Same encoding: mixed-radix rule indices, decision d = rule * n + profile,
axioms as bitmasks over decisions. Aggregates and per-axiom records must
match the pure-Python kernel bit for bit.
"""

from libc.stdint cimport uint64_t

KERNEL = "compiled"

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

cdef struct Tables:
    int n
    int m
    int rules
    int decisions
    int n_fy
    int pair_of[64]
    uint64_t x_dmask[64]
    uint64_t y_dmask[64]
    uint64_t pair_dmask[64]
    uint64_t fy_dmask[64]


cdef int _fill_tables(int n, int m, Tables *t) except -1:
    cdef int rules = 1
    cdef int k, r, d, o, decisions
    for k in range(n):
        rules *= m
    decisions = rules * n
    if n < 1 or m < 1:
        raise ValueError("need at least one profile and one outcome")
    if decisions > 62:
        raise ValueError(
            f"kernel domains are limited to 62 decisions, got {decisions}"
        )
    t.n = n
    t.m = m
    t.rules = rules
    t.decisions = decisions
    for k in range(n):
        t.x_dmask[k] = 0
    for o in range(m):
        t.y_dmask[o] = 0
    for k in range(n * m):
        t.pair_dmask[k] = 0
    t.n_fy = 0

    cdef int rem, digit
    cdef uint64_t per_outcome[64]
    for r in range(rules):
        for o in range(m):
            per_outcome[o] = 0
        rem = r
        # digits little-end last: profile n-1 is the least significant
        for k in range(n - 1, -1, -1):
            digit = rem % m
            rem //= m
            d = r * n + k
            t.pair_of[d] = k * m + digit
            t.x_dmask[k] |= (<uint64_t>1) << d
            t.y_dmask[digit] |= (<uint64_t>1) << d
            t.pair_dmask[k * m + digit] |= (<uint64_t>1) << d
            per_outcome[digit] |= (<uint64_t>1) << d
        for o in range(m):
            if per_outcome[o]:
                t.fy_dmask[t.n_fy] = per_outcome[o]
                t.n_fy += 1
    return 0


cdef struct Record:
    bint pos_trivial
    bint neg_trivial
    bint structural
    bint procedural
    bint consequentialist
    bint blackbox
    bint caudal
    bint exigent
    bint impasse
    bint arrovian
    bint forcing
    bint paradox
    uint64_t pairs
    uint64_t extension
    int implied


cdef void _analyze(uint64_t a, Tables *t, Record *rec) noexcept nogil:
    cdef int n = t.n, m = t.m, rules = t.rules, decisions = t.decisions
    cdef uint64_t full = ((<uint64_t>1) << decisions) - 1
    cdef uint64_t nmask = ((<uint64_t>1) << n) - 1
    cdef uint64_t mmask = ((<uint64_t>1) << m) - 1
    cdef uint64_t v, mask, blk, s, pairs, extension
    cdef int k, r, p, i, base, implied, bit
    cdef bint structural, consequentialist, blackbox, caudal
    cdef bint arrovian, procedural, impasse, forcing, member

    structural = True
    for k in range(n):
        mask = t.x_dmask[k]
        v = a & mask
        if v != 0 and v != mask:
            structural = False
            break
    consequentialist = True
    for k in range(m):
        mask = t.y_dmask[k]
        v = a & mask
        if v != 0 and v != mask:
            consequentialist = False
            break
    blackbox = True
    for p in range(n * m):
        mask = t.pair_dmask[p]
        v = a & mask
        if v != 0 and v != mask:
            blackbox = False
            break
    caudal = True
    for i in range(t.n_fy):
        mask = t.fy_dmask[i]
        v = a & mask
        if v != 0 and v != mask:
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
        if a & t.pair_dmask[p]:
            pairs |= (<uint64_t>1) << p

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
            bit = 0
            while s > 1:
                s >>= 1
                bit += 1
            implied = implied * m + bit

    extension = 0
    for r in range(rules):
        base = r * n
        member = True
        for k in range(n):
            if not (pairs >> t.pair_of[base + k]) & 1:
                member = False
                break
        if member:
            extension |= (<uint64_t>1) << r

    rec.pos_trivial = a == full
    rec.neg_trivial = a == 0
    rec.structural = structural
    rec.procedural = procedural
    rec.consequentialist = consequentialist
    rec.blackbox = blackbox
    rec.caudal = caudal
    rec.exigent = not (
        rec.pos_trivial
        or rec.neg_trivial
        or structural
        or procedural
        or consequentialist
        or blackbox
        or caudal
    )
    rec.impasse = impasse
    rec.arrovian = arrovian
    rec.forcing = forcing
    rec.paradox = forcing and ((a >> (implied * n)) & nmask) != nmask
    rec.pairs = pairs
    rec.extension = extension
    rec.implied = implied if forcing else -1


def analyze_axiom(int n, int m, mask):
    """Full per-axiom record for one axiom bitmask."""
    cdef Tables t
    cdef Record rec
    _fill_tables(n, m, &t)
    cdef uint64_t a = <uint64_t>mask
    if mask < 0 or mask >= (1 << t.decisions):
        raise ValueError("axiom mask out of range")
    _analyze(a, &t, &rec)
    return {
        "positively_trivial": bool(rec.pos_trivial),
        "negatively_trivial": bool(rec.neg_trivial),
        "structural": bool(rec.structural),
        "procedural": bool(rec.procedural),
        "consequentialist": bool(rec.consequentialist),
        "blackbox": bool(rec.blackbox),
        "caudal": bool(rec.caudal),
        "exigent": bool(rec.exigent),
        "impasse": bool(rec.impasse),
        "arrovian": bool(rec.arrovian),
        "forcing": bool(rec.forcing),
        "paradox": bool(rec.paradox),
        "pairs_mask": int(rec.pairs),
        "extension_mask": int(rec.extension),
        "implied_index": int(rec.implied),
    }


def sweep_range(int n, int m, start, stop):
    """Aggregate sweep over axiom masks in [start, stop)."""
    cdef Tables t
    cdef Record rec
    _fill_tables(n, m, &t)
    total_axioms = 1 << t.decisions
    if not (0 <= start <= stop <= total_axioms):
        raise ValueError("mask range out of bounds")

    cdef uint64_t a, a0 = <uint64_t>start, a1 = <uint64_t>stop
    cdef long long c_pos = 0, c_neg = 0, c_str = 0, c_pro = 0
    cdef long long c_con = 0, c_bb = 0, c_cau = 0, c_exi = 0
    cdef long long c_imp = 0, c_arr = 0, c_for = 0, c_par = 0
    cdef long long v_a = 0, v_b = 0, v_c = 0, v_d = 0, v_h = 0
    cdef long long f_a = -1, f_b = -1, f_c = -1, f_d = -1, f_h = -1

    with nogil:
        a = a0
        while a < a1:
            _analyze(a, &t, &rec)
            c_pos += rec.pos_trivial
            c_neg += rec.neg_trivial
            c_str += rec.structural
            c_pro += rec.procedural
            c_con += rec.consequentialist
            c_bb += rec.blackbox
            c_cau += rec.caudal
            c_exi += rec.exigent
            c_imp += rec.impasse
            c_arr += rec.arrovian
            c_for += rec.forcing
            c_par += rec.paradox

            if rec.impasse and not rec.arrovian:
                v_a += 1
                if f_a < 0:
                    f_a = <long long>a
            if rec.blackbox and (rec.arrovian != rec.impasse):
                v_b += 1
                if f_b < 0:
                    f_b = <long long>a
            if rec.procedural and rec.arrovian and a != 0:
                v_c += 1
                if f_c < 0:
                    f_c = <long long>a
            if rec.forcing and rec.extension != ((<uint64_t>1) << rec.implied):
                v_d += 1
                if f_d < 0:
                    f_d = <long long>a
            if rec.paradox and not (rec.caudal or rec.exigent):
                v_h += 1
                if f_h < 0:
                    f_h = <long long>a
            a += 1

    counts = {
        "positively_trivial": c_pos,
        "negatively_trivial": c_neg,
        "structural": c_str,
        "procedural": c_pro,
        "consequentialist": c_con,
        "blackbox": c_bb,
        "caudal": c_cau,
        "exigent": c_exi,
        "impasse": c_imp,
        "arrovian": c_arr,
        "forcing": c_for,
        "paradox": c_par,
    }
    violations = {
        "impasse_implies_arrovian": v_a,
        "blackbox_arrovian_iff_impasse": v_b,
        "procedural_arrovian_negatively_trivial": v_c,
        "forcing_implied_rule_unique_extension": v_d,
        "paradox_only_caudal_or_exigent": v_h,
    }
    first_violation = {
        "impasse_implies_arrovian": None if f_a < 0 else int(f_a),
        "blackbox_arrovian_iff_impasse": None if f_b < 0 else int(f_b),
        "procedural_arrovian_negatively_trivial": None if f_c < 0 else int(f_c),
        "forcing_implied_rule_unique_extension": None if f_d < 0 else int(f_d),
        "paradox_only_caudal_or_exigent": None if f_h < 0 else int(f_h),
    }
    return {
        "n": n,
        "m": m,
        "rules": t.rules,
        "decisions": t.decisions,
        "start": int(start),
        "stop": int(stop),
        "total": int(stop - start),
        "counts": counts,
        "violations": violations,
        "first_violation": first_violation,
    }
