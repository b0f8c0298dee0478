"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Equality assertions are exact (tolerance zero); the only tolerances are the
stated root-value rounding bound of criterion 2 and the wall-clock budgets.
"""

import time
from fractions import Fraction

import pytest

from weylpoly import (
    assemble,
    brute_polynomial,
    check_identity,
    coeff_props,
    fisk_nx_check,
    hurwitz_determinants,
    interlace_via_stability,
    interlaces,
    inv_stats,
    is_real_rooted,
    isolate_roots,
    mutually_interlacing,
    psi,
    psi_inverse,
    q_positive_on_positive_reals,
    qpoly,
    recurrence_nx_matrix,
    refined_K,
    refined_T1,
    refined_Tq,
    signed_perms,
    stats,
    build_C,
)
from weylpoly.tables import (
    C06_DELTA4_QUINTIC,
    HURWITZ_TABLES,
    K4_ROOTS,
    K4_TABLE,
    SPECIAL_PAIRS,
    T4_TABLE,
)

Q_SAMPLES = (Fraction(1, 2), Fraction(2), Fraction(5))


class _Timer:
    def __init__(self, criterion: str, budget_s: float):
        self.criterion = criterion
        self.budget_s = budget_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"criterion-{self.criterion}: {status} ({elapsed:.2f}s, budget {self.budget_s:.0f}s)")
        if exc_type is None:
            assert elapsed < self.budget_s, (
                f"criterion {self.criterion} exceeded its {self.budget_s}s budget: {elapsed:.2f}s"
            )
        return False


def test_criterion_1_refined_table_rank4():
    with _Timer("1", 1.0):
        fam = refined_Tq(4).polys
        for i in range(8):
            assert fam[i] == T4_TABLE[i], f"entry {i} differs from the reference table"
        q = qpoly(0, 1)
        assert fam[4] == fam[3] * q
        assert fam[7] == fam[0].shift_up(1) * q


def test_criterion_2_coupled_table_rank4():
    with _Timer("2", 2.0):
        fam = refined_K(4, "direct").polys
        for i in range(8):
            assert fam[i] == K4_TABLE[i], f"entry {i} differs from the reference table"
        for i in range(8):
            iso = isolate_roots(K4_TABLE[i], Fraction(1, 10**6))
            printed = K4_ROOTS[i]
            assert len(iso.intervals) == len(printed)
            for rec, value in zip(iso.intervals, printed):
                mid = float((rec.lo + rec.hi) / 2)
                # 5e-4 as the worst-case relative half-ulp of 4 significant
                # figures, with an absolute floor below magnitude one
                assert abs(mid - value) <= 5e-4 * max(1.0, abs(value)), (i, mid, value)


def test_criterion_3_hurwitz_determinants():
    with _Timer("3", 5.0):
        for pair, expected in HURWITZ_TABLES.items():
            dets = hurwitz_determinants(build_C(*pair).poly).determinants
            assert len(dets) == len(expected), pair
            for got, want in zip(dets, expected):
                assert got == want, (pair, str(got))
        quintic = C06_DELTA4_QUINTIC
        assert q_positive_on_positive_reals(quintic)
        delta4 = hurwitz_determinants(build_C(0, 6).poly).determinants[3]
        assert delta4 == qpoly(2) * qpoly(0, 0, 0, 1) * qpoly(1, 1) * qpoly(1, 1) * quintic


def test_criterion_4_brute_force_oracles():
    with _Timer("4", 30.0):
        for n in range(2, 7):
            assert assemble("Tq", n) == brute_polynomial("Tq", n), f"Tq rank {n}"
            assert assemble("Dq", n) == brute_polynomial("Dq", n), f"Dq rank {n}"
            assert assemble("tildeB", n) == brute_polynomial("tildeB", n), f"tildeB rank {n}"
            if n >= 3:
                assert assemble("tildeD", n) == brute_polynomial("tildeD", n), f"tildeD rank {n}"
            fam = refined_Tq(n).polys
            for i in range(2 * n):
                assert fam[i] == brute_polynomial("refined_Tq", n, index=i), (n, i)


def test_criterion_5_bijection():
    with _Timer("5", 60.0):
        for n in range(2, 7):
            for sigma in signed_perms(n):
                e = psi(sigma)
                assert psi_inverse(e) == sigma
                rec = stats(sigma)
                inv = inv_stats(e)
                for i, v in enumerate(sigma.entries, start=1):
                    assert (v < 0) == (e.entries[i - 1] >= i)
                assert rec.des_D == inv.asc_D
                assert rec.neg == inv.exc
                assert rec.affine_des_D == inv.affine_asc_D
        # the printed alternative threshold disagrees on a concrete witness
        witness = (2, -1)
        e = psi(witness).entries
        group_side = witness[0] + witness[1] > 0
        adopted = 2 * e[0] + 1 * e[1] < 3 * 1
        printed_variant = 2 * e[0] + 1 * e[1] < 1 * 1
        assert group_side and adopted and not printed_variant
        print(
            "  note: affine threshold (2n-1)/n adopted; the (n-1)/n variant fails "
            f"on sigma={witness}, e={tuple(e)}"
        )


def test_criterion_6_identities():
    with _Timer("6", 120.0):
        for n in range(3, 13):
            assert check_identity("dilks_62", n).verdict == "pass", f"dilks_62 rank {n}"
        for n in range(3, 8):
            assert check_identity("stembridge", n).verdict == "pass", f"stembridge rank {n}"
        for n in range(3, 13):
            assert check_identity("t_n0_equals_prev", n).verdict == "pass", n
        for n in range(3, 11):
            assert check_identity("k_two_methods", n).verdict == "pass", n
            assert check_identity("matrix_identity", n).verdict == "pass", n
        for n in range(2, 9):
            assert check_identity("q0_reduction", n).verdict == "pass", n


def test_criterion_7_mutual_interlacing_certification():
    with _Timer("7", 180.0):
        for n in range(4, 10):
            ok, failure = mutually_interlacing(refined_T1(n))
            assert ok, (n, 1, failure)
            ok, failure = mutually_interlacing(refined_K(n, "direct").polys)
            assert ok, ("K", n, failure)
            assert is_real_rooted(assemble("tildeD", n)), n
        for q in Q_SAMPLES:
            for n in range(4, 9):
                fam = [p.eval_q(q) for p in refined_Tq(n).polys]
                ok, failure = mutually_interlacing(fam)
                assert ok, (n, q, failure)
                assert is_real_rooted(assemble("Dq", n).eval_q(q)), (n, q)


def test_criterion_8_cross_method_agreement():
    with _Timer("8", 120.0):
        families = []
        for n in range(4, 7):
            families.append(refined_T1(n))
            families.append(refined_K(n, "direct").polys)
            for q in Q_SAMPLES:
                families.append(tuple(p.eval_q(q) for p in refined_Tq(n).polys))
        for fam in families:
            for i in range(len(fam)):
                for j in range(i + 1, len(fam)):
                    via_stability = interlace_via_stability(fam[i], fam[j]).relation
                    direct = interlaces(fam[i], fam[j]).relation
                    assert via_stability == direct, (i, j, via_stability, direct)


def test_criterion_9_property_suites():
    with _Timer("9", 120.0):
        for n in range(3, 10):
            for family in ("tildeD", "tildeB"):
                props = coeff_props(assemble(family, n))
                assert props.nonnegative and props.symmetric and props.unimodal, (family, n)
        certified = []
        for n in range(4, 8):
            certified.extend(refined_T1(n))
            certified.extend(refined_K(n, "direct").polys)
        for n in range(3, 10):
            certified.append(assemble("tildeD", n))
            certified.append(assemble("tildeB", n))
            certified.append(assemble("D", n))
        for p in certified:
            if p.degree >= 1:
                assert is_real_rooted(p)
            assert all(c >= 0 for c in p.coeffs)
            assert coeff_props(p).log_concave, str(p)
        for n in range(3, 11):
            ok, violation = fisk_nx_check(recurrence_nx_matrix(n))
            assert ok, (n, violation)
