"""Integer partition combinatorics underlying the support classification.

Partitions are canonical tuples of weakly decreasing positive integers; the
empty tuple is the partition of 0.  Everything here is pure and exact.
"""

from __future__ import annotations

import enum
from functools import cache
from itertools import zip_longest

Partition = tuple[int, ...]


class DominanceRelation(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def check_partition(parts) -> Partition:
    """Canonicalize an iterable of parts, rejecting anything that is not a
    weakly decreasing sequence of positive integers (trailing zeros are
    stripped)."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"parts must be positive, got {lam}")
        if i + 1 < len(lam) and lam[i + 1] > p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths become row lengths."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for p in lam:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def multiplicities(lam: Partition) -> dict[int, int]:
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def is_m_regular(lam: Partition, m: int) -> bool:
    """True iff no part value occurs m or more times."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    return all(k < m for k in multiplicities(lam).values())


def support_invariant(lam: Partition, m: int) -> int:
    """The stratum index q attached to lam at denominator m.

    Computed as sum over i of i * floor((lam_i - lam_{i+1}) / m), with the
    sequence padded by a trailing zero.  Always satisfies q * m <= |lam|.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    q = 0
    for i, p in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        q += (i + 1) * ((p - nxt) // m)
    return q


def add(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum; adding the empty partition is the identity."""
    return tuple(a + b for a, b in zip_longest(lam, mu, fillvalue=0))


def scale(m: int, mu: Partition) -> Partition:
    """Componentwise multiple (m * mu_1, m * mu_2, ...)."""
    return tuple(m * p for p in mu) if m else ()


def union(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of the parts, sorted back into a partition."""
    return tuple(sorted(lam + mu, reverse=True))


def decompose(lam: Partition, m: int) -> tuple[Partition, Partition]:
    """Split lam = m*mu + nu componentwise with conjugate(nu) m-regular.

    The splitting is computed greedily from the difference sequence: nu keeps
    each difference reduced mod m and mu absorbs the quotients, so the pair is
    unique and size(mu) equals support_invariant(lam, m).
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    n = len(lam)
    mu = [0] * n
    nu = [0] * n
    for i in range(n - 1, -1, -1):
        nxt_mu = mu[i + 1] if i + 1 < n else 0
        nxt_nu = nu[i + 1] if i + 1 < n else 0
        nxt = lam[i + 1] if i + 1 < n else 0
        diff = lam[i] - nxt
        mu[i] = nxt_mu + diff // m
        nu[i] = nxt_nu + diff % m
    return check_partition(mu), check_partition(nu)


def decompose_regular_parts(lam: Partition, m: int) -> tuple[Partition, Partition]:
    """The multiplicity-side splitting: lam = union of m copies of mu with nu,
    where nu itself is m-regular.

    This is the conjugate of :func:`decompose`; recombine with
    ``union(scale_union, nu)`` where scale_union is m multiset copies of mu.
    """
    mu, nu = decompose(conjugate(lam), m)
    return conjugate(mu), conjugate(nu)


def recombine_regular_parts(mu: Partition, nu: Partition, m: int) -> Partition:
    """Inverse of :func:`decompose_regular_parts`."""
    out = nu
    for _ in range(m):
        out = union(out, mu)
    return out


def dominance(alpha: Partition, beta: Partition) -> DominanceRelation:
    """Compare all prefix sums of two partitions of the same number."""
    if size(alpha) != size(beta):
        raise ValueError("dominance is only defined for partitions of equal size")
    if alpha == beta:
        return DominanceRelation.EQUAL
    ge = le = True
    sa = sb = 0
    for a, b in zip_longest(alpha, beta, fillvalue=0):
        sa += a
        sb += b
        if sa < sb:
            ge = False
        if sa > sb:
            le = False
    if ge:
        return DominanceRelation.GREATER
    if le:
        return DominanceRelation.LESS
    return DominanceRelation.INCOMPARABLE


def dominates(alpha: Partition, beta: Partition) -> bool:
    """True iff alpha >= beta in dominance order (Equal counts)."""
    return dominance(alpha, beta) in (DominanceRelation.GREATER, DominanceRelation.EQUAL)


def enumerate_partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_gen_partitions(n, n if max_part is None else min(max_part, n)))


def _gen_partitions(n, max_part):
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - k, k):
            yield (k,) + rest


def enumerate_m_regular(n: int, m: int) -> list[Partition]:
    """All m-regular partitions of n, in the order of enumerate_partitions."""
    return [lam for lam in enumerate_partitions(n) if is_m_regular(lam, m)]


@cache
def count_partitions(n: int) -> int:
    if n < 0:
        return 0
    table = [1] + [0] * n
    for k in range(1, n + 1):
        for t in range(k, n + 1):
            table[t] += table[t - k]
    return table[n]


@cache
def count_m_regular(n: int, m: int) -> int:
    """Number of partitions of n in which no part repeats m or more times."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if n < 0:
        return 0
    table = [1] + [0] * n
    for k in range(1, n + 1):
        # each part value k may appear 0..m-1 times
        new = table[:]
        for reps in range(1, m):
            if reps * k > n:
                break
            for t in range(reps * k, n + 1):
                new[t] += table[t - reps * k]
        table = new
    return table[n]


def support_level(lam: Partition, m: int, sign: int) -> int:
    """Stratum index of the irreducible labelled by lam: the invariant of lam
    itself when the deformation parameter is positive, of its conjugate when
    negative."""
    if sign > 0:
        return support_invariant(lam, m)
    return support_invariant(conjugate(lam), m)


def label_from_pair(mu: Partition, nu: Partition, m: int, sign: int) -> Partition:
    """Partition labelling the irreducible attached to the pair (mu, nu),
    where nu must be m-regular: m*mu + conjugate(nu), conjugated again for
    negative parameter sign."""
    if not is_m_regular(nu, m):
        raise ValueError(f"nu must be {m}-regular, got {nu}")
    lam = add(scale(m, mu), conjugate(nu))
    return lam if sign > 0 else conjugate(lam)
