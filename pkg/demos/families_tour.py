#!/usr/bin/env python3
"""Tour of the polynomial families: recurrences, specializations, identities.

Run as `python3 demos/families_tour.py`.
"""

from fractions import Fraction

from weylpoly import assemble, brute_polynomial, check_identity, refined_Tq

print("=" * 72)
print("Refined family at rank 4 (two variables, built by the recurrence)")
print("=" * 72)
for i, p in enumerate(refined_Tq(4).polys):
    print(f"  entry {i}:  {p}")

print()
print("Assembled families")
print("-" * 72)
for family, n in [("Tq", 3), ("Dq", 3), ("D", 3), ("A", 3), ("tildeB", 3), ("tildeD", 4)]:
    print(f"  {family:>7} at rank {n}:  {assemble(family, n)}")

print()
print("q-specializations of the rank-3 q-analogue")
print("-" * 72)
dq3 = assemble("Dq", 3)
for q in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2)):
    print(f"  q = {str(q):>4}:  {dq3.eval_q(q)}")
print("  (q = 0 recovers the classical descent polynomial of rank 2)")

print()
print("Brute-force oracle agreement (exhaustive enumeration vs recurrence)")
print("-" * 72)
for family, n in [("Tq", 4), ("Dq", 4), ("tildeB", 4), ("tildeD", 4)]:
    match = assemble(family, n) == brute_polynomial(family, n)
    print(f"  {family:>7} at rank {n}: {'exact match' if match else 'MISMATCH'}")

print()
print("Named identities")
print("-" * 72)
for name, n in [
    ("dilks_62", 5),
    ("stembridge", 5),
    ("t_n0_equals_prev", 6),
    ("k_two_methods", 6),
    ("matrix_identity", 6),
    ("q0_reduction", 5),
]:
    entry = check_identity(name, n)
    print(f"  {name:>22} at rank {n}: {entry.verdict} ({entry.elapsed_ms:.1f} ms)")
