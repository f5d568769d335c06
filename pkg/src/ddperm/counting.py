"""Fast exact counters for permutations by double-descent set.

The workhorse is an insertion dynamic program: build a word left to
right by the relative rank of each new entry among the prefix.  The
state after i entries is (rank of the last entry, whether step i-1
descended); appending an entry of rank s creates a descent iff s is at
most the old last rank, and a double descent at position i iff both the
old and the new step descend.  Enforcing membership of each position in
the required set gives dd counts in O(n^2) exact big-integer work.

Also here: the convolution recursions for the no-double-descent
sequences, the singleton-set recursion that rebuilds dd({m}; n+1) from
smaller data, and the estimator that replaces initial-ascent counts by
limiting-ratio multiples.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable

from .errors import CapExceeded
from .perms import as_index_set

# Guard against accidental huge DP runs; the DP is O(n^2) and fine far
# beyond this, raise the cap per call if you mean it.
DP_CAP = 1000


@lru_cache(maxsize=None)
def _insertion_count(n: int, dd_positions: frozenset[int],
                     force_initial_ascent: bool) -> int:
    """Count words of length n whose double-descent set is exactly
    ``dd_positions``, optionally restricted to w_1 < w_2."""
    if n == 0:
        return 1
    # asc[r] / desc[r]: prefixes whose last entry has rank r among the
    # prefix, with the last step ascending / descending.
    asc = [0, 1]
    desc = [0, 0]
    for i in range(1, n):
        # Appending entry i+1 creates step i; position i can be a double
        # descent only for i >= 2.
        must = i in dd_positions
        new_asc = [0] * (i + 2)
        new_desc = [0] * (i + 2)
        if must:
            # need: previous step descended and this step descends
            run = 0
            for s in range(i, 0, -1):
                run += desc[s]
                new_desc[s] = run
        else:
            # a descent after a descent would create a double descent at
            # i, which is forbidden here (for i = 1 desc[] is all zero,
            # so the restriction is vacuous)
            run = 0
            for s in range(i, 0, -1):
                run += asc[s]
                new_desc[s] = run
            run = 0
            for s in range(2, i + 2):
                run += asc[s - 1] + desc[s - 1]
                new_asc[s] = run
        if force_initial_ascent and i == 1:
            new_desc = [0] * (i + 2)
        asc, desc = new_asc, new_desc
    return sum(asc) + sum(desc)


def dd_count(dd_set: Iterable[int], n: int, cap: int = DP_CAP) -> int:
    """Number of w in S_n with double-descent set exactly ``dd_set``.

    Exact for any n up to ``cap``; agrees with
    :func:`ddperm.bruteforce.count_dd_exact` wherever both run.
    Sets not contained in [2, n-1] give 0.
    """
    indices = as_index_set(dd_set)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"dd_count at n={n} exceeds the cap {cap}")
    if any(i < 2 or i > n - 1 for i in indices):
        return 0
    return _insertion_count(n, frozenset(indices), False)


def dd_ascent_count(dd_set: Iterable[int], n: int, cap: int = DP_CAP) -> int:
    """Number of w in S_n with w_1 < w_2 and double-descent set ``dd_set``."""
    indices = as_index_set(dd_set)
    if n < 2:
        raise ValueError("initial-ascent counts need n >= 2")
    if n > cap:
        raise CapExceeded(f"dd_ascent_count at n={n} exceeds the cap {cap}")
    if any(i < 2 or i > n - 1 for i in indices):
        return 0
    return _insertion_count(n, frozenset(indices), True)


@lru_cache(maxsize=None)
def _no_dd_ascent(n_max: int) -> tuple[int, ...]:
    if n_max < 1:
        return (1,)[: n_max + 1]
    values = [1, 1]
    for n in range(1, n_max):
        convo = sum(
            comb(n, k) * values[k] * values[n - k] for k in range(n + 1)
        )
        values.append(convo - values[n])
    return tuple(values)


def no_dd_ascent_counts(n_max: int) -> list[int]:
    """Counts of permutations with no double descents and no initial
    descent, for lengths 0..n_max.

    Computed by the convolution recursion
    a(n+1) = sum_k C(n,k) a(k) a(n-k) - a(n) seeded with a(0) = a(1) = 1;
    the seeds are the empty/singleton conventions.

    >>> no_dd_ascent_counts(5)
    [1, 1, 1, 3, 9, 39]
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return list(_no_dd_ascent(n_max))


@lru_cache(maxsize=None)
def _no_dd(n_max: int) -> tuple[int, ...]:
    blocks = _no_dd_ascent(n_max)
    values = [1]
    for n in range(n_max):
        values.append(
            sum(comb(n, k) * values[k] * blocks[n - k] for k in range(n + 1))
        )
    return tuple(values)


def no_dd_counts(n_max: int) -> list[int]:
    """Counts of permutations with no double descents at all, for
    lengths 0..n_max, via the convolution with the ascent-start counts.

    >>> no_dd_counts(5)
    [1, 1, 2, 5, 17, 70]
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return list(_no_dd(n_max))


CProvider = Callable[[tuple[int, ...], int], int]


def dd_singleton_parts(m: int, n: int,
                       c_provider: CProvider | None = None) -> tuple[int, int, int]:
    """The three summands whose total is dd({m}; n+1).

    Classifying w in S_{n+1} with a double descent at m by where the
    maximal entry n+1 sits gives three cases:

    * n+1 right of position m+1: choose k >= m+1 entries to its left
      keeping the double descent at m; the remainder has no double
      descents and no initial descent.
    * n+1 at position m-1: the m-2 entries to its left have no double
      descents; the rest starts with a descent (feeding the double
      descent) but has none itself.
    * n+1 left of position m-2: k <= m-4 entries right of it have no
      double descents; the remaining n-k start with an ascent and carry
      the double descent, now at m-1-k.

    ``c_provider(dd_set, length)`` supplies the initial-ascent counts for
    the third case (default: the exact DP).  m in {2, 3} relies on the
    length-0/1 conventions and is cross-checked against the DP.
    """
    if m < 2:
        raise ValueError(f"singleton position must be >= 2, got m={m}")
    if n < m:
        raise ValueError(f"need n >= m so that position m={m} exists in S_{n + 1}")
    if m < 4:
        warnings.warn(
            f"m={m} relies on length-0/1 conventions outside the stated "
            "range of the recursion; the result is cross-checked against "
            "the insertion count",
            stacklevel=3,
        )
    if c_provider is None:
        c_provider = dd_ascent_count
    blocks = no_dd_ascent_counts(n)
    free = no_dd_counts(n)
    first = sum(
        comb(n, k) * dd_count((m,), k) * blocks[n - k]
        for k in range(m + 1, n + 1)
    )
    second = comb(n, m - 2) * free[m - 2] * (free[n - m + 2] - blocks[n - m + 2])
    third = sum(
        comb(n, k) * free[k] * c_provider((m - 1 - k,), n - k)
        for k in range(0, m - 3)
    )
    return first, second, third


def dd_singleton_recursion(m: int, n: int,
                           c_provider: CProvider | None = None) -> int:
    """dd({m}; n+1) assembled from smaller counts via
    :func:`dd_singleton_parts`; must agree with :func:`dd_count`."""
    first, second, third = dd_singleton_parts(m, n, c_provider)
    total = first + second + third
    if m < 4:
        direct = dd_count((m,), n + 1)
        if total != direct:
            raise ArithmeticError(
                f"small-m convention mismatch: recursion gives {total}, "
                f"direct count gives {direct} for dd({{{m}}};{n + 1})"
            )
    return total


#: Reference estimates of the limiting ratio
#: (initial-ascent count with double-descent set {m}) / dd({m}; n),
#: averaged over n <= 12 and rounded to four places; see
#: :func:`ascent_ratio_average`.  The m = 3 entry is exactly 1: a double
#: descent at 3 forces w_1 < w_2.
DEFAULT_RATIO_TABLE: dict[int, Fraction] = {
    3: Fraction(1),
    4: Fraction(3941, 10000),
    5: Fraction(6362, 10000),
    6: Fraction(5056, 10000),
    7: Fraction(5676, 10000),
    8: Fraction(5359, 10000),
    9: Fraction(5515, 10000),
}


def dd_singleton_estimate(m: int, n: int,
                          ratio_table: dict[int, Fraction] | None = None) -> Fraction:
    """Estimate dd({m}; n+1) by replacing the third-case initial-ascent
    counts with ratio-table multiples of the plain counts.

    Exact rational arithmetic over the table entries, so the published
    decimals reproduce digit for digit.
    """
    if ratio_table is None:
        ratio_table = DEFAULT_RATIO_TABLE
    needed = [m - 1 - k for k in range(0, m - 3)]
    missing = sorted(set(needed) - set(ratio_table))
    if missing:
        raise ValueError(f"ratio table is missing entries for m = {missing}")
    bad = {k: v for k, v in ratio_table.items() if not 0 < v <= 1}
    if bad:
        raise ValueError(f"ratio-table values must lie in (0, 1]: {bad}")
    first, second, _ = dd_singleton_parts(m, n, c_provider=dd_ascent_count)
    free = no_dd_counts(n)
    third = sum(
        (
            comb(n, k) * free[k] * dd_count((m - 1 - k,), n - k)
            * ratio_table[m - 1 - k]
            for k in range(0, m - 3)
        ),
        start=Fraction(0),
    )
    return Fraction(first + second) + third


def ascent_ratio_average(m: int, n_max: int = 12) -> Fraction:
    """Average of (initial-ascent dd({m}) count) / dd({m}; n) over
    n from m+1 (the first length with a nonzero count) to n_max.

    The per-n ratios oscillate but settle quickly; the average over
    n <= 12 is the tabulated estimate of the limit.
    """
    if m < 3:
        raise ValueError("ratio averages start at m = 3")
    if n_max < m + 2:
        raise ValueError("n_max too small to average anything")
    ratios = []
    for n in range(m + 1, n_max + 1):
        denom = dd_count((m,), n)
        ratios.append(Fraction(dd_ascent_count((m,), n), denom))
    return sum(ratios, start=Fraction(0)) / len(ratios)
