"""Iwahori-Hecke algebra of the symmetric group at an exact root of unity.

The deformation parameter is the cyclotomic algebraic number zeta_m, never a
float: coefficients live in Q(zeta_m) represented as coefficient tuples
reduced modulo the m-th cyclotomic polynomial.  The Jacobson radical is the
kernel of the regular-representation trace form (valid in characteristic
zero), simple modules are counted through the center of the semisimple
quotient, and splitness over Q(zeta_m) is audited by decomposing that center
into primitive idempotents with rational-only factorization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from itertools import permutations as _itperms
from math import isqrt

from sympy import QQ, Poly, gcdex, symbols

from . import linalg
from .partitions import count_m_regular

Permutation = tuple[int, ...]
CycElement = tuple  # coefficients of 1, zeta, ..., zeta^(phi-1)


# ---------------------------------------------------------------------------
# cyclotomic field arithmetic


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, ascending coefficients, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        out[k] = coeff
        if coeff:
            for j, d in enumerate(den):
                num[k + j] -= coeff * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicField:
    """Exact arithmetic in Q(zeta_m); elements are coefficient tuples of
    length phi(m) over the power basis of zeta_m."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError(f"m must be at least 2, got {m}")
        self.m = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = len(self.modulus) - 1
        self.zero = (0,) * self.degree
        one = [0] * self.degree
        one[0] = 1
        self.one = tuple(one)
        # rewrite rows for zeta^k, degree <= k <= 2*degree - 2
        rows: dict[int, tuple[int, ...]] = {}
        cur = [-c for c in self.modulus[: self.degree]]
        rows[self.degree] = tuple(cur)
        for k in range(self.degree + 1, 2 * self.degree - 1):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [cur[t] + top * rows[self.degree][t] for t in range(self.degree)]
            rows[k] = tuple(cur)
        self._rewrite = rows

    def element(self, coeffs) -> CycElement:
        """Reduce an arbitrary-length ascending coefficient sequence."""
        work = list(coeffs)
        out = [0] * self.degree
        for k in range(len(work) - 1, -1, -1):
            c = work[k]
            if not c:
                continue
            if k < self.degree:
                out[k] += c
            elif k in self._rewrite:
                row = self._rewrite[k]
                for t in range(self.degree):
                    if row[t]:
                        out[t] += c * row[t]
            else:
                # fold one top power at a time
                row = self._rewrite[self.degree]
                for t in range(self.degree):
                    if row[t]:
                        work_index = k - self.degree + t
                        work[work_index] += c * row[t]
        return tuple(out)

    def from_rational(self, value) -> CycElement:
        out = [0] * self.degree
        out[0] = value
        return tuple(out)

    def zeta(self, power: int = 1) -> CycElement:
        power %= self.m
        return self.element([0] * power + [1])

    def add(self, a: CycElement, b: CycElement) -> CycElement:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: CycElement, b: CycElement) -> CycElement:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: CycElement) -> CycElement:
        return tuple(-x for x in a)

    def scale(self, a: CycElement, factor) -> CycElement:
        return tuple(x * factor for x in a)

    def mul(self, a: CycElement, b: CycElement) -> CycElement:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if c:
                row = self._rewrite[k]
                for t in range(d):
                    if row[t]:
                        out[t] += c * row[t]
        return tuple(out)

    def is_zero(self, a: CycElement) -> bool:
        return not any(a)

    def inv(self, a: CycElement) -> CycElement:
        """Field inverse by the extended Euclidean algorithm against the
        cyclotomic modulus."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        r0 = [Fraction(c) for c in self.modulus]
        r1 = trim([Fraction(c) for c in a])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            # divide r0 by r1
            quot = [Fraction(0)] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            for k in range(len(quot) - 1, -1, -1):
                c = rem[k + len(r1) - 1] / r1[-1]
                quot[k] = c
                if c:
                    for j, d in enumerate(r1):
                        rem[k + j] -= c * d
            rem = trim(rem[: len(r1) - 1])
            # s update: s0 - quot * s1
            prod = [Fraction(0)] * (len(quot) + len(s1) - 1)
            for i, x in enumerate(quot):
                if x:
                    for j, y in enumerate(s1):
                        prod[i + j] += x * y
            new_s = [Fraction(0)] * max(len(s0), len(prod))
            for i, x in enumerate(s0):
                new_s[i] += x
            for i, x in enumerate(prod):
                new_s[i] -= x
            r0, r1 = (r1 if r1 else [Fraction(0)]), (rem if rem else [Fraction(0)])
            s0, s1 = s1, trim(new_s) or [Fraction(0)]
        if not r1 or not r1[0]:
            raise ArithmeticError("element shares a factor with the modulus")
        c = r1[0]
        return self.element([x / c for x in s1])

    def as_fraction(self, a: CycElement) -> Fraction:
        if any(a[1:]):
            raise ValueError(f"{a} is not rational")
        return Fraction(a[0])

    def format(self, a: CycElement) -> str:
        if self.is_zero(a):
            return "0"
        bits = []
        for k, c in enumerate(a):
            if not c:
                continue
            unit = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            bits.append(f"{c}*{unit}" if k else f"{c}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# permutations


def perm_length(w: Permutation) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_compose(u: Permutation, v: Permutation) -> Permutation:
    return tuple(u[v[i]] for i in range(len(v)))


def perm_inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Reduced word by bubble sorting descents: the product of the adjacent
    transpositions s_{word[0]} ... s_{word[-1]} equals w."""
    work = list(w)
    collected = []
    while True:
        for i in range(len(work) - 1):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                collected.append(i)
                break
        else:
            return tuple(reversed(collected))


# ---------------------------------------------------------------------------
# the algebra


class HeckeElement:
    """Finite cyclotomic-coefficient combination of basis elements indexed by
    permutations."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: dict[Permutation, CycElement]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if not algebra.field.is_zero(c)}

    def coefficient(self, w: Permutation) -> CycElement:
        return self.terms.get(w, self.algebra.field.zero)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        F = self.algebra.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = F.add(out[w], c) if w in out else c
        return HeckeElement(self.algebra, out)

    def __neg__(self) -> "HeckeElement":
        F = self.algebra.field
        return HeckeElement(self.algebra, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            self._check(other)
            return HeckeElement(
                self.algebra, self.algebra.mul_raw(self.terms, other.terms)
            )
        F = self.algebra.field
        scalar = other if isinstance(other, tuple) else F.from_rational(Fraction(other))
        return HeckeElement(
            self.algebra, {w: F.mul(c, scalar) for w, c in self.terms.items()}
        )

    def __rmul__(self, other) -> "HeckeElement":
        return self * other

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        F = self.algebra.field
        bits = [f"({F.format(c)})*T{list(w)}" for w, c in sorted(self.terms.items())]
        return " + ".join(bits)

    def _check(self, other: "HeckeElement"):
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")


class HeckeAlgebra:
    """Hecke algebra of rank p with quadratic relation
    (T_i - 1)(T_i + q) = 0 at q = zeta_m^r.

    Basis multiplication goes through reduced-word insertion; one- and
    two-sided sweeps over the weak order make the regular trace form and full
    multiplication cheap enough for exact work up to p = 6.
    """

    def __init__(self, p: int, m: int, r: int = 1):
        if p < 1:
            raise ValueError(f"rank must be positive, got {p}")
        self.p = p
        self.m = m
        self.field = CyclotomicField(m)
        self.q = self.field.zeta(r)
        self.one_minus_q = self.field.sub(self.field.one, self.q)
        self.perms: list[Permutation] = sorted(_itperms(range(p)))
        self.index = {w: k for k, w in enumerate(self.perms)}
        self.identity_perm: Permutation = tuple(range(p))
        self.dim = len(self.perms)
        self._length = {w: perm_length(w) for w in self.perms}
        # generator actions: value swaps for left, position swaps for right
        self._left: list[dict[Permutation, tuple[Permutation, bool]]] = []
        self._right: list[dict[Permutation, tuple[Permutation, bool]]] = []
        for i in range(p - 1):
            lact = {}
            ract = {}
            for w in self.perms:
                siw = tuple(
                    (i + 1 if x == i else i if x == i + 1 else x) for x in w
                )
                lact[w] = (siw, w.index(i) < w.index(i + 1))
                wsi = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                ract[w] = (wsi, w[i] < w[i + 1])
            self._left.append(lact)
            self._right.append(ract)
        # factorizations v = s_i * parent and w = parent * s_j, swept by length
        self._left_bfs = []
        self._right_bfs = []
        for w in sorted(self.perms, key=lambda v: (self._length[v], v)):
            if w == self.identity_perm:
                continue
            i = min(k for k in range(p - 1) if w.index(k) > w.index(k + 1))
            self._left_bfs.append((w, i, self._left[i][w][0]))
            j = min(k for k in range(p - 1) if w[k] > w[k + 1])
            self._right_bfs.append((w, j, self._right[j][w][0]))

    # -- raw dict arithmetic ------------------------------------------------

    def lmul_gen(self, i: int, elem: dict) -> dict:
        """Left multiplication by the i-th generator."""
        F = self.field
        q, omq = self.q, self.one_minus_q
        out: dict[Permutation, CycElement] = {}
        act = self._left[i]
        for w, c in elem.items():
            w2, up = act[w]
            if up:
                out[w2] = F.add(out[w2], c) if w2 in out else c
            else:
                qc = F.mul(q, c)
                out[w2] = F.add(out[w2], qc) if w2 in out else qc
                oc = F.mul(omq, c)
                out[w] = F.add(out[w], oc) if w in out else oc
        return {w: c for w, c in out.items() if not F.is_zero(c)}

    def rmul_gen(self, i: int, elem: dict) -> dict:
        """Right multiplication by the i-th generator."""
        F = self.field
        q, omq = self.q, self.one_minus_q
        out: dict[Permutation, CycElement] = {}
        act = self._right[i]
        for w, c in elem.items():
            w2, up = act[w]
            if up:
                out[w2] = F.add(out[w2], c) if w2 in out else c
            else:
                qc = F.mul(q, c)
                out[w2] = F.add(out[w2], qc) if w2 in out else qc
                oc = F.mul(omq, c)
                out[w] = F.add(out[w], oc) if w in out else oc
        return {w: c for w, c in out.items() if not F.is_zero(c)}

    def left_translates(self, b: dict) -> dict[Permutation, dict]:
        """All products (basis element indexed by v) * b, swept up the weak
        order in one pass."""
        g = {self.identity_perm: b}
        for v, i, parent in self._left_bfs:
            g[v] = self.lmul_gen(i, g[parent])
        return g

    def right_translates(self, a: dict) -> dict[Permutation, dict]:
        """All products a * (basis element indexed by w)."""
        h = {self.identity_perm: a}
        for w, j, parent in self._right_bfs:
            h[w] = self.rmul_gen(j, h[parent])
        return h

    def mul_raw(self, a: dict, b: dict) -> dict:
        if not a or not b:
            return {}
        F = self.field
        if len(a) == 1:
            ((v, cv),) = a.items()
            cur = b
            for i in reversed(reduced_word(v)):
                cur = self.lmul_gen(i, cur)
            if cv == F.one:
                return cur
            return {w: c for w, c in ((w, F.mul(cv, cw)) for w, cw in cur.items()) if not F.is_zero(c)}
        g = self.left_translates(b)
        out: dict[Permutation, CycElement] = {}
        for v, cv in a.items():
            for w, cw in g[v].items():
                prod = F.mul(cv, cw)
                out[w] = F.add(out[w], prod) if w in out else prod
        return {w: c for w, c in out.items() if not F.is_zero(c)}

    # -- public element constructors -----------------------------------------

    def one(self) -> HeckeElement:
        return HeckeElement(self, {self.identity_perm: self.field.one})

    def generator(self, i: int) -> HeckeElement:
        if not 0 <= i < self.p - 1:
            raise ValueError(f"generator index {i} out of range for rank {self.p}")
        return HeckeElement(self, {self._left[i][self.identity_perm][0]: self.field.one})

    def basis_element(self, w: Permutation) -> HeckeElement:
        if tuple(w) not in self.index:
            raise ValueError(f"{w} is not a permutation of range({self.p})")
        return HeckeElement(self, {tuple(w): self.field.one})

    def element_from_vector(self, vec: list[CycElement]) -> HeckeElement:
        return HeckeElement(
            self,
            {w: vec[k] for k, w in enumerate(self.perms) if not self.field.is_zero(vec[k])},
        )

    def vector_from_terms(self, terms: dict) -> list[CycElement]:
        return [terms.get(w, self.field.zero) for w in self.perms]

    # -- trace form, radical, center ------------------------------------------

    @cached_property
    def regular_trace(self) -> dict[Permutation, CycElement]:
        """Trace of left multiplication by each basis element on the regular
        representation."""
        F = self.field
        theta = {w: F.zero for w in self.perms}
        for w in self.perms:
            g = self.left_translates({w: F.one})
            for v, fv in g.items():
                c = fv.get(w)
                if c is not None:
                    theta[v] = F.add(theta[v], c)
        return theta

    @cached_property
    def gram(self) -> list[list[CycElement]]:
        """Symmetric matrix of tr(L_{T_v T_w}) over the basis."""
        F = self.field
        theta = self.regular_trace
        N = self.dim
        G: list[list[CycElement]] = [[F.zero] * N for _ in range(N)]
        for wi, w in enumerate(self.perms):
            g = self.left_translates({w: F.one})
            for v, fv in g.items():
                acc = F.zero
                for x, cx in fv.items():
                    acc = F.add(acc, F.mul(cx, theta[x]))
                G[self.index[v]][wi] = acc
        return G

    def _blowup_rows(self, fmatrix: list[list[CycElement]]) -> list[list]:
        """Restriction of scalars: one rational row per (row, zeta-power)."""
        F = self.field
        d = F.degree
        zpows = [F.zeta(k) for k in range(d)]
        out = []
        for row in fmatrix:
            blocks = []
            for entry in row:
                if F.is_zero(entry):
                    blocks.append(None)
                else:
                    blocks.append([F.mul(entry, zp) for zp in zpows])
            for t in range(d):
                qrow = []
                for block in blocks:
                    if block is None:
                        qrow.extend([0] * d)
                    else:
                        qrow.extend(block[k][t] for k in range(d))
                out.append(qrow)
        return out

    def _fkernel(self, fmatrix: list[list[CycElement]], ncols: int) -> list[list[CycElement]]:
        """Kernel over the cyclotomic field via the rational blowup."""
        F = self.field
        d = F.degree
        rows = [r for r in self._blowup_rows(fmatrix) if any(r)]
        kern = linalg.kernel_basis(rows, ncols * d)
        vecs = []
        for flat in kern:
            vecs.append([tuple(flat[j * d + k] for k in range(d)) for j in range(ncols)])
        return vecs

    @cached_property
    def _radical_echelon(self) -> "_Echelon":
        vecs = self._fkernel(self.gram, self.dim)
        ech = _Echelon(self.field, self.dim)
        for v in vecs:
            ech.add(v)
        return ech

    def radical_dimension(self) -> int:
        return len(self._radical_echelon.rows)

    def radical_basis(self) -> list[HeckeElement]:
        """Echelonized basis of the Jacobson radical."""
        return [self.element_from_vector(row) for _, row in self._radical_echelon.rows]

    def contains_in_radical(self, elem: HeckeElement) -> bool:
        vec = self.vector_from_terms(elem.terms)
        reduced = self._radical_echelon.reduce(vec)
        return all(self.field.is_zero(c) for c in reduced)

    @cached_property
    def _center_basis(self) -> list[list[CycElement]]:
        """Normal forms spanning the center of the semisimple quotient."""
        F = self.field
        ech = self._radical_echelon
        blocks: list[list[CycElement]] = []
        for i in range(self.p - 1):
            cols = []
            for w in self.perms:
                single = {w: F.one}
                comm: dict[Permutation, CycElement] = dict(self.rmul_gen(i, single))
                for w2, c in self.lmul_gen(i, single).items():
                    comm[w2] = F.sub(comm.get(w2, F.zero), c)
                cols.append(ech.reduce(self.vector_from_terms(comm)))
            # transpose the per-basis-element columns into constraint rows
            for rowidx in range(self.dim):
                blocks.append([cols[k][rowidx] for k in range(self.dim)])
        vecs = self._fkernel(blocks, self.dim)
        center = _Echelon(self.field, self.dim)
        for v in vecs:
            center.add(ech.reduce(v))
        return [row for _, row in center.rows]

    def center_dimension(self) -> int:
        """Dimension over the cyclotomic field of the center of the quotient
        by the radical."""
        return len(self._center_basis)


class _Echelon:
    """Reduced row echelon form over the cyclotomic field with exact
    arithmetic; supports normal forms and coordinates along the way."""

    def __init__(self, field: CyclotomicField, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[tuple[int, list[CycElement]]] = []

    def reduce(self, vec: list[CycElement]) -> list[CycElement]:
        F = self.field
        vec = list(vec)
        for pivot, row in self.rows:
            c = vec[pivot]
            if not F.is_zero(c):
                for j in range(self.ncols):
                    if not F.is_zero(row[j]):
                        vec[j] = F.sub(vec[j], F.mul(c, row[j]))
        return vec

    def coordinates(self, vec: list[CycElement]) -> list[CycElement]:
        """Coefficients of vec over the echelon rows; raises if vec is not in
        their span."""
        F = self.field
        vec = list(vec)
        coords = [F.zero] * len(self.rows)
        for idx, (pivot, row) in enumerate(self.rows):
            c = vec[pivot]
            if not F.is_zero(c):
                coords[idx] = c
                for j in range(self.ncols):
                    if not F.is_zero(row[j]):
                        vec[j] = F.sub(vec[j], F.mul(c, row[j]))
        if any(not F.is_zero(c) for c in vec):
            raise ValueError("vector is not in the span of the echelon rows")
        return coords

    def add(self, vec: list[CycElement]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        F = self.field
        vec = self.reduce(vec)
        pivot = next((j for j in range(self.ncols) if not F.is_zero(vec[j])), None)
        if pivot is None:
            return False
        inv = F.inv(vec[pivot])
        vec = [F.mul(c, inv) for c in vec]
        for _, row in self.rows:
            c = row[pivot]
            if not F.is_zero(c):
                for j in range(self.ncols):
                    if not F.is_zero(vec[j]):
                        row[j] = F.sub(row[j], F.mul(c, vec[j]))
        self.rows.append((pivot, vec))
        self.rows.sort(key=lambda item: item[0])
        return True

    def pivots(self) -> set[int]:
        return {pivot for pivot, _ in self.rows}


# ---------------------------------------------------------------------------
# presentation checks


@dataclass
class PresentationReport:
    p: int
    m: int
    checked: int = 0
    violations: list[str] | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_presentation(p: int, m: int) -> PresentationReport:
    """Check the quadratic, braid and commuting relation families as exact
    identities of elements."""
    if p < 2:
        raise ValueError("need rank at least 2")
    H = HeckeAlgebra(p, m)
    violations: list[str] = []
    checked = 0
    gens = [H.generator(i) for i in range(p - 1)]
    one = H.one()
    q = H.q
    for i, t in enumerate(gens):
        checked += 1
        lhs = (t - one) * (t + one * q)
        if not lhs.is_zero():
            violations.append(f"quadratic relation fails at T_{i}: {lhs!r}")
    for i in range(p - 2):
        checked += 1
        lhs = gens[i] * gens[i + 1] * gens[i]
        rhs = gens[i + 1] * gens[i] * gens[i + 1]
        if lhs != rhs:
            violations.append(f"braid relation fails at ({i},{i + 1})")
    for i in range(p - 1):
        for j in range(i + 2, p - 1):
            checked += 1
            if gens[i] * gens[j] != gens[j] * gens[i]:
                violations.append(f"distant generators {i},{j} do not commute")
    return PresentationReport(p, m, checked, violations or None)


def radical(p: int, m: int) -> list[HeckeElement]:
    """Basis of the Jacobson radical, computed as the kernel of the
    regular-representation trace form."""
    return HeckeAlgebra(p, m).radical_basis()


# ---------------------------------------------------------------------------
# simple-module counting with splitness audit


class AuditInconclusive(Exception):
    """The center could not be split into primitive idempotents with the
    candidates tried; counting falls back to an upper bound."""


@dataclass
class HeckeSimplesReport:
    p: int
    m: int
    dim: int
    rad_dim: int
    simples: int
    expected_m_regular: int
    split_audit: bool
    block_dims: list[int] | None
    upper_bound_only: bool

    @property
    def ok(self) -> bool:
        return self.split_audit and self.simples == self.expected_m_regular


class _CenterAlgebra:
    """The center of the semisimple quotient with exact structure constants,
    small enough for direct idempotent hunting."""

    def __init__(self, H: HeckeAlgebra):
        self.H = H
        self.F = H.field
        basis = H._center_basis
        self.k = len(basis)
        self.basis_vectors = basis
        # the basis comes out of a reduced echelon: unit pivots, zero at the
        # pivots of the other rows, so coordinates are read off directly
        self.pivot_cols = [
            next(j for j, c in enumerate(v) if not self.F.is_zero(c)) for v in basis
        ]
        # structure constants gamma[s][t] as coordinate lists
        self.gamma: list[list[list[CycElement] | None]] = [
            [None] * self.k for _ in range(self.k)
        ]
        rad = H._radical_echelon
        for s in range(self.k):
            ds = self._dict(basis[s])
            for t in range(s, self.k):
                prod = H.mul_raw(ds, self._dict(basis[t]))
                coords = self._coords_of_vector(rad.reduce(H.vector_from_terms(prod)))
                self.gamma[s][t] = coords
                self.gamma[t][s] = coords
        self.identity = self._coords_of_vector(
            rad.reduce(H.vector_from_terms({H.identity_perm: self.F.one}))
        )

    def _dict(self, vec: list[CycElement]) -> dict:
        return {
            w: vec[k]
            for k, w in enumerate(self.H.perms)
            if not self.F.is_zero(vec[k])
        }

    def _coords_of_vector(self, vec: list[CycElement]) -> list[CycElement]:
        F = self.F
        vec = list(vec)
        coords = []
        for row, pivot in zip(self.basis_vectors, self.pivot_cols):
            c = vec[pivot]
            coords.append(c)
            if not F.is_zero(c):
                for j in range(self.H.dim):
                    if not F.is_zero(row[j]):
                        vec[j] = F.sub(vec[j], F.mul(c, row[j]))
        if any(not F.is_zero(c) for c in vec):
            raise AuditInconclusive("product left the span of the center")
        return coords

    def mul(self, u: list[CycElement], v: list[CycElement]) -> list[CycElement]:
        F = self.F
        out = [F.zero] * self.k
        for s, us in enumerate(u):
            if F.is_zero(us):
                continue
            for t, vt in enumerate(v):
                if F.is_zero(vt):
                    continue
                coeff = F.mul(us, vt)
                row = self.gamma[s][t]
                for r in range(self.k):
                    if not F.is_zero(row[r]):
                        out[r] = F.add(out[r], F.mul(coeff, row[r]))
        return out

    def rational_flat(self, u: list[CycElement]) -> list[Fraction]:
        out = []
        for c in u:
            out.extend(Fraction(x) for x in c)
        return out

    def scale(self, u, factor: Fraction) -> list[CycElement]:
        return [self.F.scale(c, factor) for c in u]

    def add(self, u, v) -> list[CycElement]:
        return [self.F.add(a, b) for a, b in zip(u, v)]

    def to_hecke_vector(self, u: list[CycElement]) -> list[CycElement]:
        F = self.F
        out = [F.zero] * self.H.dim
        for s, c in enumerate(u):
            if F.is_zero(c):
                continue
            row = self.basis_vectors[s]
            for j in range(self.H.dim):
                if not F.is_zero(row[j]):
                    out[j] = F.add(out[j], F.mul(c, row[j]))
        return out


class _RationalEchelon:
    """Tiny fraction-exact echelon with coordinate recovery, used for
    minimal-polynomial detection inside the center."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
        self.count = 0

    def add_with_coords(self, vec: list[Fraction]) -> list[Fraction] | None:
        """Insert; returns the coordinates over previously added vectors if
        dependent, None if the vector was new."""
        vec = [Fraction(x) for x in vec]
        combo = [Fraction(0)] * self.count
        for pivot, row, expr in self.rows:
            c = vec[pivot]
            if c:
                for j in range(self.ncols):
                    if row[j]:
                        vec[j] -= c * row[j]
                for j in range(len(expr)):
                    if expr[j]:
                        combo[j] += c * expr[j]
        pivot = next((j for j in range(self.ncols) if vec[j]), None)
        if pivot is None:
            return combo
        inv = 1 / vec[pivot]
        vec = [c * inv for c in vec]
        # this row equals inv * (new_vector - sum combo_j original_j)
        own = [-c * inv for c in combo] + [inv]
        self.rows.append((pivot, vec, own))
        self.count += 1
        return None


def _min_poly(center: _CenterAlgebra, e, z, dim_bound: int) -> list[Fraction]:
    """Monic minimal polynomial of z over the rationals inside the unital
    piece with identity e, ascending coefficients."""
    ech = _RationalEchelon(center.k * center.F.degree)
    power = e
    for j in range(dim_bound + 1):
        combo = ech.add_with_coords(center.rational_flat(power))
        if combo is not None:
            # z^j = sum combo[t] z^t  ->  mu = x^j - sum combo[t] x^t
            return [-combo[t] for t in range(j)] + [Fraction(1)]
        power = center.mul(power, z)
    raise AuditInconclusive("minimal polynomial search exceeded the dimension bound")


def _poly_eval(center: _CenterAlgebra, coeffs: list[Fraction], z, e):
    """Evaluate an ascending-coefficient rational polynomial at z, with e as
    the unit (Horner)."""
    acc = center.scale(e, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = center.mul(acc, z)
        acc = center.add(acc, center.scale(e, c))
    return acc


def _sympy_poly(mu_ascending: list[Fraction]) -> Poly:
    x = symbols("x")
    desc = [QQ(c.numerator, c.denominator) for c in reversed(mu_ascending)]
    return Poly(desc, x, domain="QQ")


def _poly_to_fractions(poly: Poly) -> list[Fraction]:
    desc = poly.all_coeffs()
    return [Fraction(int(c.p), int(c.q)) for c in reversed(desc)]


def _split_piece(center: _CenterAlgebra, e, basis, rng) -> list[tuple[list, int]]:
    """Recursively split the unital commutative piece (e, basis) into fields;
    returns (idempotent, rational dimension) pairs."""
    dim = len(basis)
    phi = center.F.degree
    if dim == phi:
        return [(e, dim)]
    candidates = [list(b) for b in basis]
    for _ in range(24):
        combo = [center.F.zero] * center.k
        for b in basis:
            combo = center.add(combo, center.scale(b, Fraction(rng.randint(-3, 3))))
        candidates.append(combo)
    for z in candidates:
        mu = _min_poly(center, e, z, dim)
        poly = _sympy_poly(mu)
        factors = poly.factor_list()[1]
        if any(mult != 1 for _, mult in factors):
            raise AuditInconclusive(f"minimal polynomial {mu} is not squarefree")
        if len(factors) == 1:
            if poly.degree() == dim:
                return [(e, dim)]
            continue  # z generates a proper subfield; try another element
        out = []
        for g, _ in factors:
            cof = poly.exquo(g)
            s, _, h = gcdex(cof, g)
            if h.degree() != 0:
                raise AuditInconclusive("factors of the minimal polynomial are not coprime")
            proj = (s.exquo(h) * cof).rem(poly)
            eg = _poly_eval(center, _poly_to_fractions(proj), z, e)
            if center.mul(eg, eg) != eg:
                raise AuditInconclusive("projector failed the idempotent check")
            sub_basis = []
            ech = _RationalEchelon(center.k * phi)
            for b in basis:
                cand = center.mul(eg, b)
                if ech.add_with_coords(center.rational_flat(cand)) is None:
                    sub_basis.append(cand)
            out.extend(_split_piece(center, eg, sub_basis, rng))
        return out
    raise AuditInconclusive("no splitting element found")


def count_simples(p: int, m: int, seed: int = 0) -> HeckeSimplesReport:
    """Count the simple modules as the cyclotomic dimension of the center of
    the quotient by the radical, with a splitness audit.

    The audit decomposes the center into primitive idempotents using only
    rational polynomial factorization, then demands that every block of the
    quotient have square dimension and that the blocks exhaust it.  If the
    audit cannot complete, the count is only an upper bound and is flagged as
    such.
    """
    H = HeckeAlgebra(p, m)
    rad_dim = H.radical_dimension()
    simples = H.center_dimension()
    expected = count_m_regular(p, m)
    quotient_dim = H.dim - rad_dim
    rng = random.Random(seed)
    block_dims: list[int] | None = None
    split_ok = False
    upper_bound = False
    try:
        center = _CenterAlgebra(H)
        unit_coords = center.identity
        basis = []
        for s in range(center.k):
            for k in range(H.field.degree):
                coords = [H.field.zero] * center.k
                coords[s] = H.field.zeta(k)
                basis.append(coords)
        pieces = _split_piece(center, unit_coords, basis, rng)
        fields_ok = all(qdim == H.field.degree for _, qdim in pieces)
        if len(pieces) == simples and fields_ok:
            block_dims = sorted(
                (_block_dimension(H, center, e) for e, _ in pieces), reverse=True
            )
            split_ok = (
                sum(block_dims) == quotient_dim
                and all(_is_square(d) for d in block_dims)
            )
        else:
            upper_bound = True
    except AuditInconclusive:
        upper_bound = True
    if not split_ok:
        upper_bound = True
    return HeckeSimplesReport(
        p=p,
        m=m,
        dim=H.dim,
        rad_dim=rad_dim,
        simples=simples,
        expected_m_regular=expected,
        split_audit=split_ok,
        block_dims=block_dims,
        upper_bound_only=upper_bound,
    )


def _is_square(d: int) -> bool:
    return d >= 0 and isqrt(d) ** 2 == d


def _block_dimension(H: HeckeAlgebra, center: _CenterAlgebra, e_coords) -> int:
    """Dimension of the block cut out by a central idempotent: the trace of
    left multiplication by it on the quotient."""
    F = H.field
    e_vec = center.to_hecke_vector(e_coords)
    e_dict = {
        w: e_vec[k] for k, w in enumerate(H.perms) if not F.is_zero(e_vec[k])
    }
    rad = H._radical_echelon
    complement = [w for k, w in enumerate(H.perms) if k not in rad.pivots()]
    translates = H.right_translates(e_dict)
    total = F.zero
    for w in complement:
        reduced = rad.reduce(H.vector_from_terms(translates[w]))
        total = F.add(total, reduced[H.index[w]])
    value = F.as_fraction(total)
    if value.denominator != 1:
        raise AuditInconclusive(f"block trace {value} is not an integer")
    return int(value)
