"""Symmetric group character data at the Grothendieck-group level.

Character values come from the Murnaghan-Nakayama recursion, induction
multiplicities from Littlewood-Richardson tableau counts, and graded
multiplicities from exact truncated Molien sums.  All arithmetic is integer
or Fraction arithmetic; nothing here is numeric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import (
    Partition,
    add,
    dominates,
    enumerate_partitions,
    size,
)

# multiplicity vector over partitions of a fixed n; zero entries are absent
CharacterVector = dict[Partition, int]


def content_sum(lam: Partition) -> int:
    """Sum of j - i over the boxes (i, j) of the diagram, 1-indexed."""
    total = 0
    for i, p in enumerate(lam, start=1):
        total += p * (p + 1) // 2 - i * p
    return total


def lowest_weight(lam: Partition, c: Fraction) -> Fraction:
    """Scalar by which the reflection part of the Euler element acts on the
    irreducible labelled by lam: -c times the content sum.

    Evaluated independently through the Frobenius-type row formula
    sum_i [lam_i^2/2 - (i - 1/2) lam_i] and through the content sum; the two
    must agree exactly.
    """
    by_rows = sum(
        (Fraction(p * p, 2) - Fraction(2 * i - 1, 2) * p for i, p in enumerate(lam, start=1)),
        Fraction(0),
    )
    by_contents = content_sum(lam)
    if by_rows != by_contents:
        raise RuntimeError(f"weight formulas disagree on {lam}: {by_rows} vs {by_contents}")
    return -Fraction(c) * by_contents


def _beta_to_partition(beta: tuple[int, ...]) -> Partition:
    # beta is strictly decreasing; undo the staircase shift
    n = len(beta)
    lam = tuple(b - (n - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in lam if p > 0)


@cache
def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    n = len(lam)
    beta = tuple(lam[i] + (n - 1 - i) for i in range(n))
    betaset = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in betaset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = tuple(sorted([c for c in beta if c != b] + [nb], reverse=True))
        total += (-1) ** height * _mn(_beta_to_partition(newbeta), rest)
    return total


def character_value(lam: Partition, cycle_type: Partition) -> int:
    """Character of the irreducible labelled by lam at the class of the given
    cycle type, by repeated border-strip removal."""
    if size(lam) != size(cycle_type):
        raise ValueError(
            f"cycle type {cycle_type} does not match |{lam}| = {size(lam)}"
        )
    return _mn(lam, tuple(sorted(cycle_type, reverse=True)))


def dimension(lam: Partition) -> int:
    return character_value(lam, (1,) * size(lam)) if lam else 1


def centralizer_order(cycle_type: Partition) -> int:
    z = 1
    mult: dict[int, int] = {}
    for k in cycle_type:
        mult[k] = mult.get(k, 0) + 1
    for k, a in mult.items():
        z *= k**a * factorial(a)
    return z


def class_size(cycle_type: Partition) -> int:
    return factorial(size(cycle_type)) // centralizer_order(cycle_type)


@cache
def poly_character(cycle_type: Partition, d: int) -> int:
    """Trace of a permutation of the given cycle type on degree-d monomials:
    the t^d coefficient of prod_i 1/(1 - t^{mu_i})."""
    coeffs = [1] + [0] * d
    for k in cycle_type:
        for t in range(k, d + 1):
            coeffs[t] += coeffs[t - k]
    return coeffs[d]


def decompose_class_function(n: int, values: dict[Partition, int]) -> CharacterVector:
    """Write an integer class function (cycle type -> value) in the basis of
    irreducible characters.  Raises if any multiplicity is not an integer."""
    out: CharacterVector = {}
    order = factorial(n)
    for lam in enumerate_partitions(n):
        acc = 0
        for mu, val in values.items():
            acc += class_size(mu) * val * character_value(lam, mu)
        mult = Fraction(acc, order)
        if mult.denominator != 1:
            raise RuntimeError(f"non-integral multiplicity {mult} at {lam}")
        if mult:
            out[lam] = int(mult)
    return out


def graded_poly_multiplicity(lam: Partition, n: int, d: int) -> int:
    """Multiplicity of the irreducible lam inside the degree-d polynomials in
    n permuted variables, via the exact truncated Molien sum."""
    if size(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    acc = 0
    for mu in enumerate_partitions(n):
        acc += class_size(mu) * poly_character(mu, d) * character_value(lam, mu)
    mult = Fraction(acc, factorial(n))
    if mult.denominator != 1 or mult < 0:
        raise RuntimeError(f"invalid graded multiplicity {mult} for {lam}")
    return int(mult)


def _contains(nu: Partition, lam: Partition) -> bool:
    if len(lam) > len(nu):
        return False
    return all(nu[i] >= lam[i] for i in range(len(lam)))


def _lr_count(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Number of Littlewood-Richardson fillings of the skew shape nu/lam with
    content mu.

    Cells are visited in reverse reading order (rows top to bottom, right to
    left inside a row), which makes the lattice-word condition a running
    prefix check on the content counts.
    """
    cells = []
    for r in range(len(nu)):
        lo = lam[r] if r < len(lam) else 0
        for col in range(nu[r] - 1, lo - 1, -1):
            cells.append((r, col))
    if len(cells) != size(mu):
        return 0
    if not cells:
        return 1
    grid = {}
    counts = [0] * len(mu)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, col = cells[idx]
        above = grid.get((r - 1, col), 0)
        right = grid.get((r, col + 1))
        total = 0
        for v in range(1, len(mu) + 1):
            if counts[v - 1] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] >= counts[v - 2]:
                continue  # reverse reading word must stay a lattice word
            if v <= above:
                continue  # strict down the column
            if right is not None and v > right:
                continue  # weak along the row
            counts[v - 1] += 1
            grid[(r, col)] = v
            total += fill(idx + 1)
            del grid[(r, col)]
            counts[v - 1] -= 1
        return total

    return fill(0)


def lr_induce(lam: Partition, mu: Partition) -> CharacterVector:
    """Induction product of the irreducibles lam and mu as a multiplicity
    vector over partitions of |lam| + |mu|.

    The coefficient of lam + mu is always exactly 1 and every constituent is
    dominated by lam + mu.
    """
    n = size(lam) + size(mu)
    out: CharacterVector = {}
    for nu in enumerate_partitions(n):
        if not _contains(nu, lam):
            continue
        coeff = _lr_count(nu, lam, mu)
        if coeff:
            out[nu] = coeff
    return out


def restrict(lam: Partition) -> CharacterVector:
    """Branching to one symmetric group lower: remove one corner box each."""
    if not lam:
        raise ValueError("cannot restrict the empty partition")
    out: CharacterVector = {}
    for r in range(len(lam)):
        nxt = lam[r + 1] if r + 1 < len(lam) else 0
        if lam[r] > nxt:
            smaller = lam[:r] + (lam[r] - 1,) + lam[r + 1 :]
            out[tuple(p for p in smaller if p > 0)] = 1
    return out


@dataclass(frozen=True)
class GradedCharacter:
    """Truncated graded multiplicity data of a standard module: the layer at
    degree d sits at Euler eigenvalue base_weight + d."""

    base_weight: Fraction
    layers: dict[int, CharacterVector]
    truncation_degree: int


def ch_verma(lam: Partition, c: Fraction, max_degree: int) -> GradedCharacter:
    """Graded character of the standard module induced from lam, truncated in
    degree: layer d is (degree-d polynomials) tensor lam, decomposed by
    characters."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    n = size(lam)
    layers: dict[int, CharacterVector] = {}
    for d in range(max_degree + 1):
        values = {
            mu: poly_character(mu, d) * character_value(lam, mu)
            for mu in enumerate_partitions(n)
        }
        layers[d] = decompose_class_function(n, values)
    return GradedCharacter(lowest_weight(lam, c), layers, max_degree)


def leading_term_of_induction(
    lam: Partition, mu: Partition, c: Fraction
) -> tuple[Partition, Fraction]:
    """Lowest-order constituent of the induction product: the componentwise
    sum lam + mu with its weight.

    Verifies that lam + mu occurs with coefficient exactly 1 and strictly
    minimizes the weight among all constituents; a violation raises.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("leading term analysis requires a positive parameter")
    target = add(lam, mu)
    product = lr_induce(lam, mu)
    if product.get(target) != 1:
        raise RuntimeError(f"{target} does not occur with coefficient 1 in {product}")
    w0 = lowest_weight(target, c)
    for nu in product:
        if nu != target and lowest_weight(nu, c) <= w0:
            raise RuntimeError(f"weight of {nu} is not above the leading term {target}")
    return target, w0


def dominance_weight_consistent(n: int, c: Fraction) -> bool:
    """Exhaustive check that strict dominance forces a strictly smaller
    weight at positive parameter c."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("requires a positive parameter")
    parts = enumerate_partitions(n)
    for alpha in parts:
        for beta in parts:
            if alpha == beta:
                continue
            if dominates(alpha, beta) and not lowest_weight(alpha, c) < lowest_weight(beta, c):
                return False
    return True
