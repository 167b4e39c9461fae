"""Vertically aligned Pascal entries and the signed sum that annihilates them.

In the classic centered rendering of Pascal's triangle, entry i of row n sits
directly below entry i-k of row n-2k.  The column of entries above C(n, i) is
therefore C(n-2k, i-k) for k = 0, 1, 2, ...  For every 0 < i < n these
entries satisfy one exact linear dependence: the alternating sum weighted by
the Lucas coefficients T(n, k) vanishes,

    sum_{k=0}^{i} (-1)^k * T(n, k) * C(n-2k, i-k) = 0.

The sum deliberately runs all the way to k = i.  Terms past min(i, n//2)
vanish, but for two different reasons that are worth keeping observable:
while 0 <= n-2k < i-k the binomial factor is 0, and once n-2k < 0 the
binomial is nonzero again but T(n, k) = 0 takes over.  Reports list every
term so both regimes can be checked.

Pure functions over immutable values; the sweep may fan out across worker
processes and always merges results in canonical (n ascending) order.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from .combinatorics import binomial, lucas_coeff

__all__ = [
    "AlignedEntry",
    "AlignedColumn",
    "IdentityTerm",
    "IdentityReport",
    "SweepSummary",
    "aligned_entries",
    "identity_sum",
    "identity_sweep",
]


@dataclass(frozen=True)
class AlignedEntry:
    """One aligned entry: C(n-2k, i-k), i.e. entry i-k of row n-2k."""

    k: int
    value: int


@dataclass(frozen=True)
class AlignedColumn:
    """The entries of Pascal's triangle vertically aligned with C(n, i).

    ``entries[0]`` is the anchor C(n, i) itself; increasing k walks upward
    through the triangle two rows at a time.
    """

    n: int
    i: int
    entries: tuple[AlignedEntry, ...]


def aligned_entries(n: int, i: int) -> AlignedColumn:
    """Anchor C(n, i) plus everything vertically aligned above it.

    Covers k = 0..min(i, n//2); beyond that the would-be entries fall
    outside the triangle.  Requires 0 <= i <= n.
    """
    if n < 0:
        raise ValueError(f"aligned_entries requires n >= 0, got n={n}")
    if not 0 <= i <= n:
        raise ValueError(f"aligned_entries requires 0 <= i <= n, got i={i}, n={n}")
    entries = tuple(
        AlignedEntry(k, binomial(n - 2 * k, i - k))
        for k in range(min(i, n // 2) + 1)
    )
    return AlignedColumn(n, i, entries)


@dataclass(frozen=True)
class IdentityTerm:
    """Term k of the dependence: signed_coefficient * binomial_value."""

    k: int
    signed_coefficient: int
    binomial_value: int
    product: int


@dataclass(frozen=True)
class IdentityReport:
    """Full term-by-term evaluation of the alignment dependence at (n, i)."""

    n: int
    i: int
    terms: tuple[IdentityTerm, ...]
    total: int
    holds: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "i": self.i,
            "terms": [
                {
                    "k": t.k,
                    "signed_coefficient": t.signed_coefficient,
                    "binomial_value": t.binomial_value,
                    "product": t.product,
                }
                for t in self.terms
            ],
            "total": self.total,
            "holds": self.holds,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IdentityReport":
        terms = tuple(
            IdentityTerm(
                t["k"], t["signed_coefficient"], t["binomial_value"], t["product"]
            )
            for t in data["terms"]
        )
        return cls(data["n"], data["i"], terms, data["total"], data["holds"])


def identity_sum(n: int, i: int) -> IdentityReport:
    """Evaluate sum_{k=0}^{i} (-1)^k T(n,k) C(n-2k, i-k) term by term.

    Only defined on the hypothesis 0 < i < n (at i = 0 or i = n the sum is
    1, not 0, and returning it would invite misuse).  The report lists all
    i+1 terms, including the vanishing tail, and ``holds`` records whether
    the total is exactly zero.
    """
    if not 0 < i < n:
        raise ValueError(
            f"identity_sum requires 0 < i < n, got n={n}, i={i}"
        )
    terms = []
    total = 0
    for k in range(i + 1):
        coeff = (-1) ** k * lucas_coeff(n, k)
        bval = binomial(n - 2 * k, i - k)
        product = coeff * bval
        total += product
        terms.append(IdentityTerm(k, coeff, bval, product))
    return IdentityReport(n, i, tuple(terms), total, total == 0)


@dataclass(frozen=True)
class SweepSummary:
    """Outcome of checking the dependence for every (n, i) up to n_max."""

    n_max: int
    pairs_checked: int
    failures: tuple[tuple[int, int, int], ...]  # (n, i, nonzero total)


def _sweep_range(n_start: int, n_end: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Check all pairs with n in [n_start, n_end], sharing work across rows.

    Evaluates the same sum as :func:`identity_sum` but amortizes the Lucas
    coefficients (once per n) and the triangle rows (built incrementally by
    the Pascal recurrence, which also exercises it) instead of recomputing
    both per pair.  Skips terms whose Lucas factor is zero; they contribute
    nothing to the total.
    """
    rows: list[list[int]] = [[1]]
    for m in range(1, n_end + 1):
        prev = rows[m - 1]
        rows.append([1] + [prev[j - 1] + prev[j] for j in range(1, m)] + [1])

    checked = 0
    failures: list[tuple[int, int, int]] = []
    for n in range(n_start, n_end + 1):
        lucas = [lucas_coeff(n, k) for k in range(n // 2 + 1)]
        for i in range(1, n):
            total = 0
            for k in range(min(i, n // 2) + 1):
                row = rows[n - 2 * k]
                j = i - k
                if j <= n - 2 * k:
                    term = lucas[k] * row[j]
                    total += -term if k & 1 else term
            checked += 1
            if total != 0:
                failures.append((n, i, total))
    return checked, failures


def identity_sweep(n_max: int, workers: int = 1) -> SweepSummary:
    """Verify the dependence for every 0 < i < n with 2 <= n <= n_max.

    ``workers`` > 1 fans row ranges out to worker processes; the summary is
    identical regardless (failures are merged in n-ascending order).
    """
    if n_max < 2:
        raise ValueError(f"identity_sweep requires n_max >= 2, got {n_max}")
    if workers < 1:
        raise ValueError(f"identity_sweep requires workers >= 1, got {workers}")

    if workers == 1:
        checked, failures = _sweep_range(2, n_max)
        return SweepSummary(n_max, checked, tuple(failures))

    # Chunk by rows; later rows cost more, so use many small chunks to
    # balance the pool.  Futures are collected in submission order, which
    # keeps the merged report canonical.
    chunk = max(1, (n_max - 1) // (4 * workers))
    bounds = list(range(2, n_max + 1, chunk))
    futures = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        for start in bounds:
            end = min(start + chunk - 1, n_max)
            futures.append(pool.submit(_sweep_range, start, end))
        checked = 0
        failures = []
        for fut in futures:
            part_checked, part_failures = fut.result()
            checked += part_checked
            failures.extend(part_failures)
    return SweepSummary(n_max, checked, tuple(failures))
