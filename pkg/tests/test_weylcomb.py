import itertools

import pytest

from weylpoly import (
    DomainError,
    EnumerationCapError,
    InvSeq,
    SignedPerm,
    UsageError,
    brute_polynomial,
    enumerate_objects,
    even_signed_perms,
    inv_stats,
    inversion_sequences,
    psi,
    psi_inverse,
    qpoly,
    qxpoly,
    signed_perms,
    stats,
    xpoly,
)
from weylpoly.exactpoly import QXPoly, XPoly


class TestObjects:
    def test_signed_perm_validation(self):
        SignedPerm((2, -1, 3))
        with pytest.raises(DomainError):
            SignedPerm((1, 1))
        with pytest.raises(DomainError):
            SignedPerm((1, 3))

    def test_inv_seq_validation(self):
        InvSeq((1, 3, 5))
        with pytest.raises(DomainError):
            InvSeq((2, 0))
        with pytest.raises(DomainError):
            InvSeq((0, -1))


class TestEnumeration:
    def test_counts(self):
        assert len(list(signed_perms(2))) == 8
        assert len(list(even_signed_perms(3))) == 24
        assert len(list(inversion_sequences(3))) == 48

    def test_duplicate_free(self):
        seen = set(p.entries for p in signed_perms(3))
        assert len(seen) == 48

    def test_even_means_even(self):
        for p in even_signed_perms(3):
            assert sum(1 for v in p.entries if v < 0) % 2 == 0

    def test_dispatch(self):
        assert len(list(enumerate_objects("inversion_sequences", 2))) == 8
        assert len(list(enumerate_objects("signed_perms", 2))) == 8
        assert len(list(enumerate_objects("even_signed_perms", 2))) == 4
        with pytest.raises(UsageError):
            list(enumerate_objects("nope", 2))

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            next(signed_perms(9))
        gen = signed_perms(9, cap=9)
        assert next(gen).entries == (1, 2, 3, 4, 5, 6, 7, 8, 9)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("WEYLPOLY_CAP", "2")
        with pytest.raises(EnumerationCapError):
            next(signed_perms(3))
        monkeypatch.setenv("WEYLPOLY_CAP", "9")
        assert next(signed_perms(9)) is not None


class TestStats:
    def test_identity_permutation(self):
        for n in (2, 3, 5):
            rec = stats(tuple(range(1, n + 1)))
            assert rec.des_B == rec.des_D == 0
            assert rec.affine_des_B == 1
            assert rec.neg == 0 and rec.parity_even

    def test_mixed_signs_rank3(self):
        rec = stats((-2, 1, -3))
        assert rec.neg == 2
        assert rec.neg_D == 1
        assert rec.des_B == 2
        assert rec.des_D == 2
        assert rec.affine_des_D == 2
        assert rec.parity_even

    def test_rank2_affine_bump(self):
        rec = stats((2, -1))
        assert rec.des_D == 1
        assert rec.affine_des_D == 2

    def test_rank1_rejected(self):
        with pytest.raises(DomainError):
            stats((1,))

    def test_record_invariants_exhaustive(self):
        for sigma in signed_perms(3):
            rec = stats(sigma)
            assert rec.affine_des_B in (rec.des_B, rec.des_B + 1)
            assert rec.affine_des_D in (rec.des_D, rec.des_D + 1)
            assert rec.neg_D in (rec.neg, rec.neg - 1)


class TestInvStats:
    def test_all_zero(self):
        rec = inv_stats((0, 0, 0, 0))
        assert (rec.exc, rec.asc_D, rec.affine_asc_D) == (0, 0, 1)

    def test_mixed_entries(self):
        rec = inv_stats((1, 1, 5))
        assert (rec.exc, rec.asc_D, rec.affine_asc_D) == (2, 2, 2)

    def test_rank2_example(self):
        rec = inv_stats((0, 2))
        assert (rec.exc, rec.asc_D, rec.affine_asc_D) == (1, 1, 2)

    def test_invalid_sequence(self):
        with pytest.raises(DomainError):
            inv_stats((3, 0))

    def test_length1_rejected(self):
        with pytest.raises(DomainError):
            inv_stats((0,))


class TestPsi:
    def test_identity_maps_to_zero(self):
        assert psi(tuple(range(1, 6))).entries == (0,) * 5

    def test_sign_case_split(self):
        assert psi((-2, 1, -3)).entries == (1, 1, 5)
        assert psi((2, -1)).entries == (0, 2)

    def test_roundtrip_exhaustive(self):
        for n in (2, 3, 4, 5):
            for sigma in signed_perms(n):
                assert psi_inverse(psi(sigma)) == sigma

    def test_roundtrip_randomized_large_ranks(self):
        import random

        rng = random.Random(1729)
        for n in (7, 8):
            for _ in range(500):
                values = list(range(1, n + 1))
                rng.shuffle(values)
                sigma = SignedPerm(tuple(v if rng.random() < 0.5 else -v for v in values))
                assert psi_inverse(psi(sigma)) == sigma

    def test_bijection_properties_exhaustive(self):
        for n in (2, 3, 4):
            seen = set()
            for sigma in signed_perms(n):
                e = psi(sigma)
                seen.add(e.entries)
                rec = stats(sigma)
                inv = inv_stats(e)
                # negativity marker
                for i, v in enumerate(sigma.entries, start=1):
                    assert (v < 0) == (e.entries[i - 1] >= i)
                # descent and excedance transport
                assert rec.des_D == inv.asc_D
                assert rec.neg == inv.exc
                # the adopted affine threshold agrees with the group side
                assert rec.affine_des_D == inv.affine_asc_D
            assert len(seen) == 2**n * [1, 2, 6, 24][n - 1]

    def test_printed_alternative_threshold_fails(self):
        # witness: the (n-1)/n variant disagrees on sigma = (2, -1)
        sigma = (2, -1)
        e = psi(sigma).entries
        n = 2
        group_side = sigma[0] + sigma[1] > 0
        printed_variant = n * e[0] + (n - 1) * e[1] < (n - 1) * (n - 1)
        assert group_side and not printed_variant


class TestBrutePolynomials:
    def test_classical_rank2(self):
        assert brute_polynomial("A", 2) == xpoly(1, 4, 1)

    def test_q_type_D_rank2(self):
        assert brute_polynomial("Dq", 2) == qxpoly((1,), (1, 1), (0, 1))

    def test_coupled_rank2(self):
        # (1+q)(1+x)(1+qx) expanded
        want = qxpoly((1,), (1, 1), (0, 1)) * qpoly(1, 1)
        assert brute_polynomial("Tq", 2) == want

    def test_Tq_is_one_plus_q_times_Dq(self):
        for n in (2, 3, 4):
            assert brute_polynomial("Tq", n) == brute_polynomial("Dq", n) * qpoly(1, 1)

    def test_refined_slices_sum_to_total(self):
        for n in (2, 3, 4):
            total = QXPoly()
            for i in range(2 * n):
                total = total + brute_polynomial("refined_Tq", n, index=i)
            assert total == brute_polynomial("Tq", n)

    def test_refined_at_one_matches_inversion_sequence_route(self):
        # independent route: enumerate inversion sequences directly
        for n in (2, 3, 4):
            by_seq = [dict() for _ in range(2 * n)]
            for e in inversion_sequences(n):
                rec = inv_stats(e)
                bucket = by_seq[e.entries[-1]]
                bucket[rec.asc_D] = bucket.get(rec.asc_D, 0) + 1
            for i in range(2 * n):
                coeffs = [0] * (max(by_seq[i], default=0) + 1)
                for d, c in by_seq[i].items():
                    coeffs[d] += c
                assert brute_polynomial("refined_Tq", n, index=i).eval_q(1) == XPoly(tuple(coeffs))

    def test_affine_type_B_small(self):
        assert brute_polynomial("tildeB", 2) == xpoly(0, 4, 4)

    def test_tilde_T_doubles_tilde_D(self):
        for n in (2, 3, 4):
            assert brute_polynomial("tildeT_via_B", n) == brute_polynomial("tildeD", n) * 2

    def test_unknown_family(self):
        with pytest.raises(UsageError):
            brute_polynomial("X", 3)

    def test_refined_needs_index(self):
        with pytest.raises(UsageError):
            brute_polynomial("refined_Tq", 3)
        with pytest.raises(UsageError):
            brute_polynomial("refined_Tq", 3, index=6)

    def test_cap_applies(self):
        with pytest.raises(EnumerationCapError):
            brute_polynomial("Tq", 9)
