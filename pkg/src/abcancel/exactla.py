"""Exact integer and rational linear algebra on small dense matrices.

Everything here is computed over arbitrary-precision integers or
`fractions.Fraction`; there is no floating point anywhere.  The two
workhorses are the row Hermite normal form (with its unimodular
transform) and the Smith normal form, which between them decide lattice
membership, lattice intersection, and the structure of finitely
generated abelian groups.

Conventions:
  * matrices act on ROW vectors; a lattice is the set of integer
    combinations of the rows of a generator matrix,
  * Hermite form is row echelon with positive pivots and entries above
    each pivot reduced into [0, pivot),
  * Smith form has a non-negative diagonal d1 | d2 | ... with zeros last.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like '-3/5', and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True)
class RatVec:
    """Immutable vector over Q with componentwise arithmetic."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", tuple(rat(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "RatVec":
        return RatVec(-a for a in self.coords)

    def scale(self, k) -> "RatVec":
        k = rat(k)
        return RatVec(k * a for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def den_lcm(self) -> int:
        out = 1
        for a in self.coords:
            out = lcm(out, a.denominator)
        return out

    def _check_dim(self, other: "RatVec") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __repr__(self) -> str:
        return "RatVec(%s)" % ", ".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class IntMat:
    """Immutable rectangular matrix over Z."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMat":
        return cls([[0] * cols for _ in range(rows)])

    def transpose(self) -> "IntMat":
        return IntMat(zip(*self.entries)) if self.entries else IntMat([])

    def mul(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        return IntMat(_mat_mul([list(r) for r in self.entries],
                               [list(r) for r in other.entries]))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __repr__(self) -> str:
        return f"IntMat({[list(r) for r in self.entries]})"


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition u*m*v = d with u, v unimodular and d diagonal."""

    d: IntMat
    u: IntMat
    v: IntMat

    def diagonal(self) -> list[int]:
        n = min(self.d.rows, self.d.cols)
        return [self.d.entries[i][i] for i in range(n)]


# ---------------------------------------------------------------------------
# raw list-of-lists kernels (shared by the public API and by sibling modules)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def rows_hnf(mat: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite form of an integer row list; returns (h, u) with u*mat = h.

    h is echelon with positive pivots, entries above each pivot reduced
    into [0, pivot), zero rows last; u is unimodular.
    """
    h = [list(map(int, row)) for row in mat]
    n = len(h)
    cols = len(h[0]) if h else 0
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, n):
            if h[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, n):
            if not h[i][c]:
                continue
            a, b = h[r][c], h[i][c]
            g, x, y = _xgcd(a, b)
            aa, bb = a // g, b // g
            # 2x2 block [[x, y], [-bb, aa]] has determinant 1.
            h[r], h[i] = (
                [x * p + y * q for p, q in zip(h[r], h[i])],
                [-bb * p + aa * q for p, q in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [x * p + y * q for p, q in zip(u[r], u[i])],
                [-bb * p + aa * q for p, q in zip(u[r], u[i])],
            )
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [p - q * s for p, s in zip(h[i], h[r])]
                u[i] = [p - q * s for p, s in zip(u[i], u[r])]
        r += 1
    return h, u


def rows_kernel(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the left kernel {z : z * mat = 0} of an integer row list."""
    h, u = rows_hnf(mat)
    return [u[i] for i in range(len(h)) if all(x == 0 for x in h[i])]


def rows_rank(mat: Sequence[Sequence[int]]) -> int:
    h, _ = rows_hnf(mat)
    return sum(1 for row in h if any(row))


def nonzero_rows(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(row) for row in mat if any(row)]


def solve_echelon(h: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[int]]:
    """Integer y with y*h = target for an echelon h, or None.

    Rows of h beyond the echelon rank receive coefficient 0.
    """
    rem = list(map(int, target))
    y = [0] * len(h)
    for i, row in enumerate(h):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            continue
        if rem[piv] % row[piv]:
            return None
        q = rem[piv] // row[piv]
        y[i] = q
        if q:
            rem = [p - q * s for p, s in zip(rem, row)]
    if any(rem):
        return None
    return y


def solve_int_combination(gens: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[int]]:
    """Integer c with c*gens = target, or None if target is outside the span."""
    if not gens:
        return [] if not any(target) else None
    h, u = rows_hnf(gens)
    y = solve_echelon(h, target)
    if y is None:
        return None
    return _mat_mul([y], u)[0]


def solve_rational_combination(rows: Sequence[Sequence[Fraction]],
                               target: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Rational t with t*rows = target, or None; free coefficients are 0."""
    work = [list(map(Fraction, row)) + [Fraction(i == k)
                                        for i in range(len(rows))]
            for k, row in enumerate(rows)]
    n = len(target)
    rem = list(map(Fraction, target))
    coeff = [Fraction(0)] * len(rows)
    used = [False] * len(rows)
    # Gaussian elimination with the transform carried on the right block.
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append((r, c))
        r += 1
    for i, c in pivots:
        f = rem[c]
        if f:
            for j in range(n):
                rem[j] -= f * work[i][j]
            for k in range(len(rows)):
                coeff[k] += f * work[i][n + k]
    if any(rem):
        return None
    return coeff


def unimodular_inverse(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of a unimodular integer matrix (via its Hermite form)."""
    h, u = rows_hnf(mat)
    n = len(mat)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if h != ident:
        raise ValueError("matrix is not unimodular")
    return u


# ---------------------------------------------------------------------------
# public operations


def hnf(m: IntMat) -> tuple[IntMat, IntMat]:
    """Row Hermite normal form; returns (h, u) with u*m = h, u unimodular."""
    h, u = rows_hnf(m.entries)
    return IntMat(h), IntMat(u)


def _is_diagonal(d: list[list[int]]) -> bool:
    return all(x == 0 for i, row in enumerate(d) for j, x in enumerate(row) if i != j)


def _chain_violation(d: list[list[int]]) -> Optional[int]:
    diag = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    for i in range(len(diag) - 1):
        a, b = diag[i], diag[i + 1]
        if a == 0 and b != 0:
            return i
        if a != 0 and b % a:
            return i
    return None


def snf(m: IntMat) -> SnfResult:
    """Smith normal form computed by alternating row and column Hermite passes.

    The diagonal is made non-negative with zeros last, and adjacent
    entries are merged into gcd/lcm pairs until d_i | d_{i+1} throughout.
    """
    d = m.to_lists()
    nr, nc = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    if nr == 0 or nc == 0:
        return SnfResult(IntMat(d), IntMat(u), IntMat(v))
    for _ in range(200):
        h, u2 = rows_hnf(d)
        d = h
        u = _mat_mul(u2, u)
        dt = [list(col) for col in zip(*d)]
        ht, v2 = rows_hnf(dt)
        d = [list(col) for col in zip(*ht)]
        v = _mat_mul(v, [list(col) for col in zip(*v2)])
        if not _is_diagonal(d):
            continue
        i = _chain_violation(d)
        if i is None:
            break
        # Folding row i+1 into row i puts gcd(d_i, d_{i+1}) in position i
        # on the next passes.
        d[i] = [a + b for a, b in zip(d[i], d[i + 1])]
        u[i] = [a + b for a, b in zip(u[i], u[i + 1])]
    else:
        raise RuntimeError("Smith reduction did not stabilize")
    return SnfResult(IntMat(d), IntMat(u), IntMat(v))


def det(n: IntMat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not n.is_square():
        raise ValueError("determinant requires a square matrix")
    size = n.rows
    if size == 0:
        return 1
    a = n.to_lists()
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, size) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def is_unimodular(n: IntMat) -> bool:
    """True iff the square integer matrix has determinant +1 or -1."""
    return det(n) in (1, -1)


def _common_denominator(vecs: Sequence[RatVec]) -> int:
    out = 1
    for v in vecs:
        out = lcm(out, v.den_lcm())
    return out


def lattice_member(gens: Sequence[RatVec], x: RatVec) -> Optional[list[int]]:
    """Integer coefficients c with sum(c_i * gens_i) = x, or None.

    Denominators are cleared with one common multiple, after which the
    question is an integer linear solve against the Hermite form.
    """
    dims = {g.dim for g in gens} | {x.dim}
    if len(dims) > 1:
        raise ValueError("dimension mismatch among lattice vectors")
    if not gens:
        return [] if x.is_zero() else None
    scale = _common_denominator(list(gens) + [x])
    int_gens = [[int(c * scale) for c in g] for g in gens]
    int_x = [int(c * scale) for c in x]
    return solve_int_combination(int_gens, int_x)


def lattice_intersect(gens_a: Sequence[RatVec], gens_b: Sequence[RatVec]) -> list[RatVec]:
    """Canonical generators of span_Z(gens_a) intersect span_Z(gens_b).

    Computed from the left kernel of the stacked matrix [A; -B]: a kernel
    row (z_a, z_b) means z_a*A = z_b*B, and those common values generate
    the intersection.
    """
    dims = {g.dim for g in list(gens_a) + list(gens_b)}
    if len(dims) > 1:
        raise ValueError("dimension mismatch among lattice vectors")
    if not gens_a or not gens_b:
        return []
    dim = dims.pop()
    scale = _common_denominator(list(gens_a) + list(gens_b))
    rows_a = [[int(c * scale) for c in g] for g in gens_a]
    rows_b = [[-int(c * scale) for c in g] for g in gens_b]
    kernel = rows_kernel(rows_a + rows_b)
    na = len(rows_a)
    images = _mat_mul([z[:na] for z in kernel], rows_a)
    basis = nonzero_rows(rows_hnf(images)[0]) if images else []
    return [RatVec(Fraction(c, scale) for c in row) for row in basis]


def rat_rows_hnf_basis(rows: Sequence[RatVec]) -> list[RatVec]:
    """Canonical (Hermite) basis of the lattice generated by rational rows."""
    if not rows:
        return []
    scale = _common_denominator(rows)
    int_rows = [[int(c * scale) for c in v] for v in rows]
    basis = nonzero_rows(rows_hnf(int_rows)[0])
    return [RatVec(Fraction(c, scale) for c in row) for row in basis]
