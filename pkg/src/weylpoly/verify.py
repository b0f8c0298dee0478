"""Named verification suites orchestrating checks from every module.

Each suite builds a list of (check_id, parameters, thunk) triples; the
runner times each thunk and collects ReportEntry values in submission
order, so output is deterministic for any worker count.  A thunk returns
(ok, witness) with a JSON-ready witness, or a complete ReportEntry of its
own.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import tables
from .errors import UsageError
from .exactpoly import (
    QPoly,
    QXPoly,
    XPoly,
    coeff_props,
    poly_to_json,
    qpoly,
    xpoly_to_json,
)
from .realroots import interlaces, is_real_rooted, isolate_roots, mutually_interlacing
from .recurrences import (
    check_identity,
    fisk_nx_check,
    recurrence_nx_matrix,
    refined_affine_T,
    refined_K,
    refined_T1,
    refined_Tq,
    assemble,
)
from .report import ReportEntry, VerificationReport
from .stability import (
    build_C,
    hurwitz_determinants,
    interlace_via_stability,
    q_positive_on_positive_reals,
)
from .weylcomb import brute_polynomial, inv_stats, psi, psi_inverse, signed_perms, stats

SUITES = ("paper_tables", "oracles", "identities", "interlacing", "stability", "all")

DEFAULT_Q_SAMPLES = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5))

_Check = tuple[str, dict, Callable]


def _entry_from_thunk(check_id: str, params: dict, thunk: Callable) -> ReportEntry:
    start = time.perf_counter()
    result = thunk()
    elapsed = (time.perf_counter() - start) * 1000.0
    if isinstance(result, ReportEntry):
        return result
    ok, witness = result
    if ok:
        return ReportEntry(check_id, params, "pass", None, elapsed)
    return ReportEntry(check_id, params, "fail", witness or {"detail": "check failed"}, elapsed)


def _skipped(check_id: str, params: dict) -> ReportEntry:
    return ReportEntry(check_id, params, "skipped", None, 0.0)


def _run_checks(checks: Sequence[_Check], jobs: int = 1) -> list[ReportEntry]:
    if jobs <= 1:
        return [_entry_from_thunk(cid, params, thunk) for cid, params, thunk in checks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_entry_from_thunk, cid, params, thunk) for cid, params, thunk in checks]
        return [f.result() for f in futures]


def _diff_witness(lhs, rhs) -> dict:
    return {"difference": poly_to_json(lhs - rhs)}


# ---------------------------------------------------------------------------
# paper_tables
# ---------------------------------------------------------------------------


def _check_table_T4(i: int):
    got = refined_Tq(4).polys[i]
    want = tables.T4_TABLE[i]
    return got == want, None if got == want else _diff_witness(got, want)


def _check_T4_scalar_relations():
    fam = refined_Tq(4).polys
    q = QPoly((0, 1))
    ok1 = fam[4] == fam[3] * q
    ok2 = fam[7] == fam[0].shift_up(1) * q
    ok = ok1 and ok2
    return ok, None if ok else {"entry4_is_q_times_entry3": ok1, "entry7_is_qx_times_entry0": ok2}


def _check_table_K4(i: int):
    got = refined_K(4, "direct").polys[i]
    want = tables.K4_TABLE[i]
    return got == want, None if got == want else _diff_witness(got, want)


def _check_K4_roots(i: int):
    iso = isolate_roots(tables.K4_TABLE[i], Fraction(1, 10**6))
    printed = tables.K4_ROOTS[i]
    if len(iso.intervals) != len(printed):
        return False, {"expected_roots": len(printed), "isolated": len(iso.intervals)}
    for rec, value in zip(iso.intervals, printed):
        mid = (rec.lo + rec.hi) / 2
        # 5e-4 is the worst-case relative half-ulp of a 4-significant-figure
        # value; sub-unit values get it as an absolute floor.
        if abs(float(mid) - value) > 5e-4 * max(1.0, abs(value)):
            return False, {"interval": rec.to_json(), "printed": value}
    return True, None


_C_TABLE = {
    (0, 1): (tables.C01_POLY, tables.C01_STRIP_POWER),
    (0, 6): (tables.C06_POLY, tables.C06_STRIP_POWER),
    (1, 6): (tables.C16_POLY, tables.C16_STRIP_POWER),
}


def _check_C_poly(pair):
    got = build_C(*pair)
    want_poly, want_m = _C_TABLE[pair]
    ok = got.poly == want_poly and got.m == want_m
    return ok, None if ok else {"m": got.m, "expected_m": want_m}


def _check_hurwitz_table(pair):
    dets = hurwitz_determinants(build_C(*pair).poly).determinants
    want = tables.HURWITZ_TABLES[pair]
    if len(dets) != len(want):
        return False, {"count": len(dets), "expected": len(want)}
    for k, (got, expect) in enumerate(zip(dets, want), start=1):
        if got != expect:
            return False, {"delta_index": k, "difference": [str(c) for c in (got - expect).coeffs]}
    return True, None


def _check_delta_tail_coincidence(pair):
    dets = hurwitz_determinants(build_C(*pair).poly).determinants
    ok = dets[-1] == dets[-2]
    return ok, None if ok else {"delta_last": [str(c) for c in dets[-1].coeffs]}


def _check_quintic_factor():
    quintic = tables.C06_DELTA4_QUINTIC
    dets = hurwitz_determinants(build_C(0, 6).poly).determinants
    expected_delta4 = qpoly(2) * qpoly(0, 0, 0, 1) * qpoly(1, 1) * qpoly(1, 1) * quintic
    ok = q_positive_on_positive_reals(quintic) and dets[3] == expected_delta4
    return ok, None if ok else {"delta4": [str(c) for c in dets[3].coeffs]}


def suite_paper_tables() -> list[_Check]:
    checks: list[_Check] = []
    for i in range(8):
        checks.append((f"table_T4_entry", {"i": i}, lambda i=i: _check_table_T4(i)))
    checks.append(("table_T4_scalar_relations", {}, _check_T4_scalar_relations))
    for i in range(8):
        checks.append((f"table_K4_entry", {"i": i}, lambda i=i: _check_table_K4(i)))
    for i in range(8):
        checks.append((f"table_K4_roots", {"i": i}, lambda i=i: _check_K4_roots(i)))
    for pair in tables.SPECIAL_PAIRS:
        checks.append(("table_C_poly", {"pair": list(pair)}, lambda p=pair: _check_C_poly(p)))
        checks.append(
            ("table_hurwitz_determinants", {"pair": list(pair)}, lambda p=pair: _check_hurwitz_table(p))
        )
        if pair != (1, 6):
            # the last two determinants coincide only for the degree-6 couplings
            checks.append(
                ("table_delta_tail_coincidence", {"pair": list(pair)},
                 lambda p=pair: _check_delta_tail_coincidence(p))
            )
    checks.append(("quintic_factor_positive", {}, _check_quintic_factor))
    return checks


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def _check_oracle(family: str, n: int, cap: Optional[int]):
    recurrence_side = assemble(family, n)
    brute_side = brute_polynomial(family, n, cap=cap)
    ok = recurrence_side == brute_side
    return ok, None if ok else _diff_witness(recurrence_side, brute_side)


def _check_oracle_refined(n: int, cap: Optional[int]):
    fam = refined_Tq(n).polys
    for i in range(2 * n):
        brute = brute_polynomial("refined_Tq", n, index=i, cap=cap)
        if fam[i] != brute:
            return False, {"index": i, **_diff_witness(fam[i], brute)}
    return True, None


def _check_oracle_affine_refined(n: int, cap: Optional[int]):
    fam = refined_affine_T(n).polys
    total = XPoly()
    for i in range(2 * n):
        brute = brute_polynomial("refined_tildeT", n, index=i, cap=cap)
        if fam[i] != brute:
            return False, {"index": i, **_diff_witness(fam[i], brute)}
        total = total + fam[i]
    doubled = brute_polynomial("tildeD", n, cap=cap) * 2
    ok = total == doubled and total == brute_polynomial("tildeT_via_B", n, cap=cap)
    return ok, None if ok else _diff_witness(total, doubled)


def _check_psi_bijection(n: int, cap: Optional[int]):
    for sigma in signed_perms(n, cap=cap):
        e = psi(sigma)
        if psi_inverse(e) != sigma:
            return False, {"sigma": list(sigma.entries), "e": list(e.entries)}
        rec = stats(sigma)
        inv = inv_stats(e)
        neg_matches = all((v < 0) == (e.entries[i] >= i + 1) for i, v in enumerate(sigma.entries))
        if not neg_matches or rec.neg != inv.exc or rec.des_D != inv.asc_D:
            return False, {"sigma": list(sigma.entries), "e": list(e.entries)}
        if rec.affine_des_D != inv.affine_asc_D:
            return False, {
                "sigma": list(sigma.entries),
                "e": list(e.entries),
                "affine_des_D": rec.affine_des_D,
                "affine_asc_D": inv.affine_asc_D,
            }
    return True, None


def _affine_threshold_note():
    """Pass-with-witness entry surfacing the two printed affine thresholds.

    The dual printed form (n-1)/n fails on a concrete rank-2 element, while
    the adopted (2n-1)/n agrees with the group-side statistic everywhere.
    """
    sigma = (2, -1)
    e = psi(sigma).entries
    n = 2
    group_side = sigma[0] + sigma[1] > 0
    adopted = n * e[0] + (n - 1) * e[1] < (2 * n - 1) * (n - 1)
    printed_variant = n * e[0] + (n - 1) * e[1] < (n - 1) * (n - 1)
    witness = {
        "witness_sigma": list(sigma),
        "witness_e": list(e),
        "group_side_affine_condition": group_side,
        "threshold_2n_minus_1_over_n": adopted,
        "threshold_n_minus_1_over_n": printed_variant,
        "note": "adopted threshold (2n-1)/n matches the group statistic; "
        "the (n-1)/n variant does not",
    }
    ok = group_side == adopted and group_side != printed_variant
    return ok, witness if not ok else None


def _affine_threshold_entry() -> ReportEntry:
    start = time.perf_counter()
    ok, bad = _affine_threshold_note()
    sigma = (2, -1)
    e = psi(sigma).entries
    witness = bad or {
        "witness_sigma": list(sigma),
        "witness_e": list(e),
        "note": "threshold (2n-1)/n adopted; the printed (n-1)/n variant "
        "disagrees with the group-side statistic on this witness",
    }
    return ReportEntry(
        "affine_threshold_discrepancy",
        {"n": 2},
        "pass" if ok else "fail",
        witness,
        (time.perf_counter() - start) * 1000.0,
    )


def suite_oracles(max_n: int = 6, cap: Optional[int] = None) -> list[_Check]:
    cap = cap if cap is not None else max(max_n, 8)
    checks: list[_Check] = []
    for n in range(2, max_n + 1):
        checks.append(("oracle_Tq", {"n": n}, lambda n=n: _check_oracle("Tq", n, cap)))
        checks.append(("oracle_Dq", {"n": n}, lambda n=n: _check_oracle("Dq", n, cap)))
        checks.append(("oracle_tildeB", {"n": n}, lambda n=n: _check_oracle("tildeB", n, cap)))
        if n >= 3:
            checks.append(("oracle_tildeD", {"n": n}, lambda n=n: _check_oracle("tildeD", n, cap)))
            checks.append(
                ("oracle_affine_refined", {"n": n}, lambda n=n: _check_oracle_affine_refined(n, cap))
            )
        checks.append(("oracle_refined_Tq", {"n": n}, lambda n=n: _check_oracle_refined(n, cap)))
        checks.append(("psi_bijection", {"n": n}, lambda n=n: _check_psi_bijection(n, cap)))
    checks.append(("affine_threshold_discrepancy", {"n": 2}, _affine_threshold_entry))
    return checks


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


def suite_identities(max_n: int = 10, cap: Optional[int] = None) -> list[_Check]:
    checks: list[_Check] = []

    def ident(name, n):
        return (name, {"n": n}, lambda name=name, n=n: check_identity(name, n))

    for n in range(3, max_n + 1):
        checks.append(ident("dilks_62", n))
    for n in range(3, max_n + 1):
        if n <= 7:
            checks.append(ident("stembridge", n))
        else:
            checks.append(("stembridge", {"n": n}, lambda n=n: _skipped("stembridge", {"n": n})))
    for n in range(3, max_n + 1):
        checks.append(ident("t_n0_equals_prev", n))
        checks.append(ident("tilde_dual", n))
        checks.append(ident("k_two_methods", n))
        checks.append(ident("matrix_identity", n))
    for n in range(2, max_n + 1):
        if n <= 8:
            checks.append(ident("q0_reduction", n))
        else:
            checks.append(("q0_reduction", {"n": n}, lambda n=n: _skipped("q0_reduction", {"n": n})))
        checks.append(ident("oneplusq_division", n))
    for n in range(3, max_n + 1):
        checks.append(ident("interlace_chain_prop62", n))
    return checks


# ---------------------------------------------------------------------------
# interlacing
# ---------------------------------------------------------------------------


def _check_mutual(polys, label: str):
    ok, failure = mutually_interlacing(polys)
    if ok:
        return True, None
    i, j = failure
    return False, {"family": label, "first_failure": [i, j]}


def _check_real_rooted(poly, label: str):
    ok = is_real_rooted(poly)
    return ok, None if ok else {"family": label, "poly": poly_to_json(poly)}


def _check_coeff_shape(poly, need_log_concave: bool):
    props = coeff_props(poly)
    ok = props.nonnegative and props.symmetric and props.unimodal
    if need_log_concave:
        ok = ok and props.log_concave
    return ok, None if ok else {
        "nonnegative": props.nonnegative,
        "symmetric": props.symmetric,
        "unimodal": props.unimodal,
        "log_concave": props.log_concave,
    }


def _check_log_concave(poly):
    props = coeff_props(poly)
    return props.log_concave, None if props.log_concave else {"poly": xpoly_to_json(poly)}


def _check_fisk(n: int):
    ok, violation = fisk_nx_check(recurrence_nx_matrix(n))
    return ok, violation


def suite_interlacing(max_n: int = 7, q_samples: Sequence[Fraction] = (Fraction(1, 2), Fraction(2), Fraction(5))) -> list[_Check]:
    checks: list[_Check] = []
    top = max(max_n, 4)
    for n in range(4, top + 1):
        checks.append(
            ("interlacing_T_at_1", {"n": n}, lambda n=n: _check_mutual(refined_T1(n), f"T({n}) at q=1"))
        )
        checks.append(
            ("interlacing_K", {"n": n}, lambda n=n: _check_mutual(refined_K(n, "direct").polys, f"K({n})"))
        )
        checks.append(
            ("realrooted_tildeD", {"n": n}, lambda n=n: _check_real_rooted(assemble("tildeD", n), "tildeD"))
        )
    for q in q_samples:
        if q == 1:
            continue
        for n in range(4, min(top, 8) + 1):
            checks.append(
                (
                    "interlacing_T_at_q",
                    {"n": n, "q": str(q)},
                    lambda n=n, q=q: _check_mutual(
                        [p.eval_q(q) for p in refined_Tq(n).polys], f"T({n}) at q={q}"
                    ),
                )
            )
            checks.append(
                (
                    "realrooted_Dq",
                    {"n": n, "q": str(q)},
                    lambda n=n, q=q: _check_real_rooted(assemble("Dq", n).eval_q(q), "Dq"),
                )
            )
    for n in range(3, top + 1):
        checks.append(
            (
                "coeff_shape_tildeD",
                {"n": n},
                lambda n=n: _check_coeff_shape(assemble("tildeD", n), need_log_concave=True),
            )
        )
        checks.append(
            (
                "coeff_shape_tildeB",
                {"n": n},
                lambda n=n: _check_coeff_shape(assemble("tildeB", n), need_log_concave=True),
            )
        )
        checks.append(("fisk_recurrence_matrix", {"n": n}, lambda n=n: _check_fisk(n)))
    return checks


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------


def _positive_except_even_zero_at_one(p: QPoly) -> bool:
    """Positivity on (0, inf) allowing an even-order zero at q = 1."""
    q_minus_1 = QPoly((-1, 1))
    order = 0
    while True:
        try:
            p = p.exact_div(q_minus_1)
            order += 1
        except Exception:
            break
    if order % 2:
        return False
    return q_positive_on_positive_reals(p)


def _check_pair_positivity(pair, boundary_at_one: bool):
    dets = hurwitz_determinants(build_C(*pair).poly).determinants
    for k, d in enumerate(dets, start=1):
        ok = (
            _positive_except_even_zero_at_one(d)
            if boundary_at_one
            else q_positive_on_positive_reals(d)
        )
        if not ok:
            return False, {"delta_index": k, "delta": [str(c) for c in d.coeffs]}
    return True, None


def _check_agreement(polys, label: str):
    n = len(polys)
    for i in range(n):
        for j in range(i + 1, n):
            f, g = polys[i], polys[j]
            if f.degree == 0 or g.degree == 0:
                continue
            via_stability = interlace_via_stability(f, g)
            direct = interlaces(f, g)
            if via_stability.relation != direct.relation:
                return False, {
                    "family": label,
                    "pair": [i, j],
                    "stability": via_stability.relation,
                    "direct": direct.relation,
                }
    return True, None


def suite_stability(max_n: int = 6, q_samples: Sequence[Fraction] = DEFAULT_Q_SAMPLES) -> list[_Check]:
    checks: list[_Check] = []
    reduced = tables.REDUCED_INDEX_SET
    special = set(tables.SPECIAL_PAIRS)
    for a in range(len(reduced)):
        for b in range(a + 1, len(reduced)):
            pair = (reduced[a], reduced[b])
            boundary = pair in special
            cid = "hurwitz_positivity_q1_boundary" if boundary else "hurwitz_positivity"
            checks.append(
                (cid, {"pair": list(pair)}, lambda p=pair, b=boundary: _check_pair_positivity(p, b))
            )
    for q in q_samples:
        for n in range(4, max_n + 1):
            checks.append(
                (
                    "stability_agreement_T",
                    {"n": n, "q": str(q)},
                    lambda n=n, q=q: _check_agreement(
                        [p.eval_q(q) for p in refined_Tq(n).polys], f"T({n}) at q={q}"
                    ),
                )
            )
    for n in range(4, max_n + 1):
        checks.append(
            (
                "stability_agreement_K",
                {"n": n},
                lambda n=n: _check_agreement(refined_K(n, "direct").polys, f"K({n})"),
            )
        )
    return checks


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def run_suite(
    suite: str,
    max_n: Optional[int] = None,
    q_samples: Optional[Sequence[Fraction]] = None,
    jobs: int = 1,
    cap: Optional[int] = None,
) -> VerificationReport:
    """Run one named suite (or all of them) and return the report."""
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; expected one of {SUITES}")
    samples = tuple(q_samples) if q_samples else DEFAULT_Q_SAMPLES
    non_unit = tuple(q for q in samples if q != 1)
    checks: list[_Check] = []
    if suite in ("paper_tables", "all"):
        checks += suite_paper_tables()
    if suite in ("oracles", "all"):
        checks += suite_oracles(max_n=max_n or 6, cap=cap)
    if suite in ("identities", "all"):
        checks += suite_identities(max_n=max_n or 10, cap=cap)
    if suite in ("interlacing", "all"):
        checks += suite_interlacing(max_n=max_n or 7, q_samples=non_unit or (Fraction(1, 2), Fraction(2), Fraction(5)))
    if suite in ("stability", "all"):
        checks += suite_stability(max_n=max_n or 6, q_samples=samples)
    return VerificationReport(tuple(_run_checks(checks, jobs=jobs)))
