"""Signed permutations, inversion sequences, their statistics, and brute-force
generating polynomials.

Signed permutations are written in one-line notation (sigma_1, ..., sigma_n)
with |sigma_1|, ..., |sigma_n| a permutation of 1..n.  Inversion sequences e
satisfy 0 <= e_i <= 2i - 1.  All rational comparisons between statistics are
done by integer cross-multiplication; there is no floating point anywhere.

Enumeration streams are exhaustive and duplicate-free, ordered
lexicographically by (sign pattern, underlying permutation), and never
materialized, so large ranks fit in constant memory.  A cap (default 8,
overridable per call or via the WEYLPOLY_CAP environment variable) guards
against accidental huge enumerations.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError, EnumerationCapError, UsageError
from .exactpoly import QPoly, QXPoly, XPoly

DEFAULT_CAP = 8
CAP_ENV_VAR = "WEYLPOLY_CAP"


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_CAP


def _check_cap(n: int, cap: int | None) -> None:
    if n < 1:
        raise UsageError("rank must be a positive integer")
    limit = resolve_cap(cap)
    if n > limit:
        raise EnumerationCapError(
            f"rank {n} exceeds the enumeration cap {limit}; pass cap= or set {CAP_ENV_VAR}"
        )


# ---------------------------------------------------------------------------
# Objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignedPerm:
    """A signed permutation in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", e)
        if sorted(abs(v) for v in e) != list(range(1, len(e) + 1)):
            raise DomainError(f"not a signed permutation: {e}")

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class InvSeq:
    """An inversion sequence with bounds e_i <= 2i - 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", e)
        for i, v in enumerate(e, start=1):
            if not 0 <= v <= 2 * i - 1:
                raise DomainError(f"entry {v} at position {i} violates 0 <= e_i <= 2i-1")

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class StatRecord:
    neg: int
    neg_D: int
    des_B: int
    des_D: int
    affine_des_B: int
    affine_des_D: int
    parity_even: bool


@dataclass(frozen=True)
class InvStatRecord:
    exc: int
    asc_D: int
    affine_asc_D: int


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def signed_perms(n: int, cap: int | None = None) -> Iterator[SignedPerm]:
    """All 2^n * n! signed permutations of rank n."""
    _check_cap(n, cap)
    for signs in itertools.product((1, -1), repeat=n):
        for perm in itertools.permutations(range(1, n + 1)):
            yield SignedPerm(tuple(s * v for s, v in zip(signs, perm)))


def even_signed_perms(n: int, cap: int | None = None) -> Iterator[SignedPerm]:
    """Signed permutations with an even number of negative entries."""
    _check_cap(n, cap)
    for signs in itertools.product((1, -1), repeat=n):
        if signs.count(-1) % 2:
            continue
        for perm in itertools.permutations(range(1, n + 1)):
            yield SignedPerm(tuple(s * v for s, v in zip(signs, perm)))


def inversion_sequences(n: int, cap: int | None = None) -> Iterator[InvSeq]:
    """All 2^n * n! inversion sequences of length n."""
    _check_cap(n, cap)
    for e in itertools.product(*(range(2 * i) for i in range(1, n + 1))):
        yield InvSeq(e)


_ENUMERATORS = {
    "signed_perms": signed_perms,
    "even_signed_perms": even_signed_perms,
    "inversion_sequences": inversion_sequences,
}


def enumerate_objects(kind: str, n: int, cap: int | None = None) -> Iterator:
    """Dispatch by kind id: signed_perms, even_signed_perms, inversion_sequences."""
    try:
        gen = _ENUMERATORS[kind]
    except KeyError:
        raise UsageError(f"unknown enumeration kind {kind!r}") from None
    return gen(n, cap=cap)


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------


def _entries(sigma) -> tuple[int, ...]:
    if isinstance(sigma, SignedPerm):
        return sigma.entries
    return SignedPerm(tuple(sigma)).entries


def stats(sigma) -> StatRecord:
    """Descent and sign statistics of a signed permutation (rank >= 2)."""
    s = _entries(sigma)
    n = len(s)
    if n < 2:
        raise DomainError("statistics involving sigma_1 + sigma_2 need rank >= 2")
    neg = sum(1 for v in s if v < 0)
    neg_d = sum(1 for v in s[1:] if v < 0)
    inner = sum(1 for i in range(n - 1) if s[i] > s[i + 1])
    des_b = inner + (1 if s[0] < 0 else 0)
    des_d = inner + (1 if s[0] + s[1] < 0 else 0)
    affine = 1 if s[n - 2] + s[n - 1] > 0 else 0
    return StatRecord(
        neg=neg,
        neg_D=neg_d,
        des_B=des_b,
        des_D=des_d,
        affine_des_B=des_b + affine,
        affine_des_D=des_d + affine,
        parity_even=(neg % 2 == 0),
    )


def _inv_entries(e) -> tuple[int, ...]:
    if isinstance(e, InvSeq):
        return e.entries
    return InvSeq(tuple(e)).entries


def inv_stats(e) -> InvStatRecord:
    """Ascent-type statistics of an inversion sequence (length >= 2).

    The 0-ascent fires when e_1 + e_2/2 >= 3/2 and the affine ascent when
    e_{n-1}/(n-1) + e_n/n < (2n-1)/n, both evaluated by cross-multiplication.
    """
    v = _inv_entries(e)
    n = len(v)
    if n < 2:
        raise DomainError("ascent statistics need length >= 2")
    asc = sum(1 for i in range(1, n) if (i + 1) * v[i - 1] < i * v[i])
    if 2 * v[0] + v[1] >= 3:
        asc += 1
    exc = sum(1 for i, x in enumerate(v, start=1) if x >= i)
    affine = 1 if n * v[n - 2] + (n - 1) * v[n - 1] < (2 * n - 1) * (n - 1) else 0
    return InvStatRecord(exc=exc, asc_D=asc, affine_asc_D=asc + affine)


# ---------------------------------------------------------------------------
# The bijection between signed permutations and inversion sequences
# ---------------------------------------------------------------------------


def psi(sigma) -> InvSeq:
    """Map a signed permutation to its inversion sequence.

    With t_i the number of earlier entries of larger absolute value, the
    image is e_i = t_i for positive sigma_i and e_i = 2i - t_i - 1 for
    negative sigma_i.
    """
    s = _entries(sigma)
    out = []
    for i in range(1, len(s) + 1):
        a = abs(s[i - 1])
        t = sum(1 for j in range(i - 1) if abs(s[j]) > a)
        out.append(t if s[i - 1] > 0 else 2 * i - t - 1)
    return InvSeq(tuple(out))


def psi_inverse(e) -> SignedPerm:
    """Reconstruct the signed permutation position by position."""
    v = _inv_entries(e)
    n = len(v)
    signs = []
    ts = []
    for i in range(1, n + 1):
        ei = v[i - 1]
        if ei >= i:
            signs.append(-1)
            ts.append(2 * i - ei - 1)
        else:
            signs.append(1)
            ts.append(ei)
    available = list(range(n, 0, -1))
    abs_vals = [0] * n
    for i in range(n, 0, -1):
        abs_vals[i - 1] = available.pop(ts[i - 1])
    return SignedPerm(tuple(s * a for s, a in zip(signs, abs_vals)))


# ---------------------------------------------------------------------------
# Brute-force generating polynomials
# ---------------------------------------------------------------------------


def _descents_plain(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def _qx_from_counts(counts: dict[tuple[int, int], int]) -> QXPoly:
    if not counts:
        return QXPoly()
    max_x = max(k for k, _ in counts)
    cols: list[list[int]] = [[] for _ in range(max_x + 1)]
    for (xd, qd), c in counts.items():
        col = cols[xd]
        if len(col) <= qd:
            col.extend([0] * (qd + 1 - len(col)))
        col[qd] += c
    return QXPoly(tuple(QPoly(tuple(col)) for col in cols))


def _x_from_counts(counts: dict[int, int]) -> XPoly:
    if not counts:
        return XPoly()
    out = [0] * (max(counts) + 1)
    for d, c in counts.items():
        out[d] += c
    return XPoly(tuple(out))


@lru_cache(maxsize=None)
def _brute_refined_Tq_all(n: int) -> tuple[QXPoly, ...]:
    """All 2n last-entry slices of the q-weighted type D descent polynomial,
    computed in one sweep over the signed permutations."""
    buckets: list[dict[tuple[int, int], int]] = [dict() for _ in range(2 * n)]
    for sigma in signed_perms(n, cap=n):
        rec = stats(sigma)
        i = psi(sigma).entries[-1]
        key = (rec.des_D, rec.neg)
        buckets[i][key] = buckets[i].get(key, 0) + 1
    return tuple(_qx_from_counts(b) for b in buckets)


@lru_cache(maxsize=None)
def _brute_refined_affine_all(n: int) -> tuple[XPoly, ...]:
    buckets: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for sigma in signed_perms(n, cap=n):
        rec = stats(sigma)
        i = psi(sigma).entries[-1]
        buckets[i][rec.affine_des_D] = buckets[i].get(rec.affine_des_D, 0) + 1
    return tuple(_x_from_counts(b) for b in buckets)


def brute_polynomial(family: str, n: int, index: int | None = None, cap: int | None = None):
    """Exact generating polynomial by exhaustive summation.

    Families: A (descents over the symmetric group of rank n+1), B, Bq,
    tildeB (signed permutations), Dq, tildeD (even signed permutations),
    Tq, tildeT_via_B (signed permutations with type D statistics), and the
    refined slices refined_Tq / refined_tildeT, which need ``index``.
    """
    if family == "A":
        if n < 0:
            raise UsageError("family A needs n >= 0")
        _check_cap(n + 1, cap)
        counts: dict[int, int] = {}
        for perm in itertools.permutations(range(1, n + 2)):
            d = _descents_plain(perm)
            counts[d] = counts.get(d, 0) + 1
        return _x_from_counts(counts)

    if family in ("refined_Tq", "refined_tildeT"):
        if index is None:
            raise UsageError(f"family {family} needs an index")
        _check_cap(n, cap)
        if not 0 <= index <= 2 * n - 1:
            raise UsageError("index out of range 0..2n-1")
        if family == "refined_Tq":
            return _brute_refined_Tq_all(n)[index]
        return _brute_refined_affine_all(n)[index]

    if family not in ("B", "Bq", "Dq", "Tq", "tildeB", "tildeD", "tildeT_via_B"):
        raise UsageError(f"unknown brute-force family {family!r}")
    _check_cap(n, cap)
    if n < 2:
        raise UsageError("ground-set statistics need n >= 2")

    if family in ("Dq", "tildeD"):
        source = even_signed_perms(n, cap=n)
    else:
        source = signed_perms(n, cap=n)

    if family in ("Bq", "Dq", "Tq"):
        qcounts: dict[tuple[int, int], int] = {}
        for sigma in source:
            rec = stats(sigma)
            if family == "Bq":
                key = (rec.des_B, rec.neg)
            elif family == "Dq":
                key = (rec.des_D, rec.neg_D)
            else:
                key = (rec.des_D, rec.neg)
            qcounts[key] = qcounts.get(key, 0) + 1
        return _qx_from_counts(qcounts)

    xcounts: dict[int, int] = {}
    for sigma in source:
        rec = stats(sigma)
        if family == "B":
            d = rec.des_B
        elif family == "tildeB":
            d = rec.affine_des_B
        elif family == "tildeD":
            d = rec.affine_des_D
        else:
            d = rec.affine_des_D
        xcounts[d] = xcounts.get(d, 0) + 1
    return _x_from_counts(xcounts)
