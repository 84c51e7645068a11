"""Partition combinatorics and integer-vector lattice windows.

Partitions are plain tuples of non-negative integers, stored without trailing
zeros; every operation treats missing parts as 0, so equality of normalized
tuples is padding-insensitive.  Integer vectors (possibly negative, possibly
non-monotone entries) are plain tuples of fixed length.
"""

from __future__ import annotations

import itertools

from .errors import EmptyWindow, NotAPartition


def normalize(lam) -> tuple:
    """Return lam as a tuple with trailing zeros removed."""
    lam = tuple(int(x) for x in lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def check_partition(lam) -> tuple:
    """Normalize lam, raising NotAPartition unless it is weakly decreasing
    and non-negative."""
    lam = normalize(lam)
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise NotAPartition(f"{lam} is not weakly decreasing")
    if lam and lam[-1] < 0:
        raise NotAPartition(f"{lam} has negative parts")
    return lam


def part(lam, i: int) -> int:
    """1-based part accessor with zero padding: lam_i, or 0 out of range."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def weight(lam) -> int:
    """|lam| = sum of the parts."""
    return sum(lam)


def nstat(lam) -> int:
    """The statistic n(lam) = sum_i (i-1) lam_i."""
    return sum(i * x for i, x in enumerate(lam))


def contains(lam, mu) -> bool:
    """True iff mu_i <= lam_i for all i (both must be partitions)."""
    lam, mu = check_partition(lam), check_partition(mu)
    n = max(len(lam), len(mu))
    return all(part(mu, i) <= part(lam, i) for i in range(1, n + 1))


def is_horizontal_strip(lam, mu) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... (interlacing)."""
    lam, mu = normalize(lam), normalize(mu)
    n = max(len(lam), len(mu)) + 1
    for i in range(1, n + 1):
        if not (part(lam, i) >= part(mu, i) >= part(lam, i + 1)):
            return False
    return True


def _enumeration_key(p):
    return (len(p), p)


def horizontal_strip_predecessors(lam):
    """All partitions nu such that lam/nu is a horizontal strip, each exactly
    once, ordered by (length, lexicographic)."""
    lam = check_partition(lam)
    if not lam:
        return [()]
    ranges = [range(part(lam, i + 1), part(lam, i) + 1) for i in range(1, len(lam) + 1)]
    out = set()
    for nu in itertools.product(*ranges):
        if all(nu[i] >= nu[i + 1] for i in range(len(nu) - 1)):
            out.add(normalize(nu))
    return sorted(out, key=_enumeration_key)


def subpartitions(lam):
    """All partitions mu contained in lam, each exactly once, ordered by
    (length, lexicographic)."""
    lam = check_partition(lam)
    ranges = [range(0, part(lam, i) + 1) for i in range(1, len(lam) + 1)]
    out = set()
    for mu in itertools.product(*ranges):
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            out.add(normalize(mu))
    return sorted(out, key=_enumeration_key)


def staircase(n: int) -> tuple:
    """The staircase exponent vector (n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError("staircase requires n >= 1")
    return tuple(range(n - 1, -1, -1))


def lattice_window(upper, lower):
    """Iterate all integer vectors mu with lower_i <= mu_i <= upper_i.

    Odometer order: the last coordinate varies fastest.  Raises EmptyWindow
    when some lower bound exceeds its upper bound.
    """
    upper, lower = tuple(upper), tuple(lower)
    if len(upper) != len(lower):
        raise EmptyWindow("bound vectors differ in length")
    for lo, hi in zip(lower, upper):
        if lo > hi:
            raise EmptyWindow(f"lower bound {lo} exceeds upper bound {hi}")
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))


def interlacing_vectors(lam):
    """All integer vectors nu of length len(lam)-1 with lam_i >= nu_i >= lam_{i+1}.

    This is the branching index set for the recursive evaluation of
    integer-vector-indexed W functions; for partitions it coincides with the
    horizontal-strip predecessors written with fixed length.
    """
    lam = tuple(lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(len(lam) - 1)]
    return [tuple(v) for v in itertools.product(*ranges)]


def format_partition(lam) -> str:
    """Bracketed text form used by the CLI, e.g. "[3,1]"; "[]" is empty."""
    return "[" + ",".join(str(x) for x in normalize(lam)) + "]"


def parse_partition(text: str) -> tuple:
    """Inverse of format_partition; raises NotAPartition on malformed input."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise NotAPartition(f"malformed partition text: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError as exc:
        raise NotAPartition(f"malformed partition text: {text!r}") from exc
    return check_partition(parts)
