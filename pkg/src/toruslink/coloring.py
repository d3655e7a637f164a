"""
Fox p-colorings of closed braids and of torus-covering links.

A coloring assigns an element of the dihedral quandle Z/pZ (operation
x*y = 2y - x) to every arc.  Transporting the tuple of colors at the top
of a braid to the bottom is linear over the integers; the transport matrix
of a single letter fixes all strands except the crossing pair, where

    sigma_i:      (x_i, x_{i+1}) -> (x_{i+1}, 2 x_{i+1} - x_i)
    sigma_i^-1:   (x_i, x_{i+1}) -> (2 x_i - x_{i+1}, x_i)

Transport composes anti-homomorphically: matrix(v * w) = matrix(w) @ matrix(v).
Colorings of the closure of a word are the fixed vectors of its matrix
mod p, and colorings of the torus-covering link of a commuting pair are
the joint fixed vectors of both matrices.

All linear algebra here is exact: integer matrices with arbitrary
precision entries, and Gaussian elimination over Z/pZ with deterministic
first-nonzero pivoting (the emitted kernel basis is in reduced echelon
form with an identity pattern on the free coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, CommutingPair

Matrix = tuple[tuple[int, ...], ...]


class NotOddPrimeError(ValueError):
    """Raised when a modulus is not an odd prime."""


def is_odd_prime(p: int) -> bool:
    """Deterministic trial-division primality test for odd desk-scale inputs."""
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise NotOddPrimeError(f"modulus must be an odd prime, got {p}")


# ---------------------------------------------------------------------------
# Integer matrix helpers
# ---------------------------------------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b[0]), len(b)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(row[t] * col[t] for t in range(k)) for col in bt) for row in a
    )


def mat_mod(a: Matrix, p: int) -> Matrix:
    return tuple(tuple(v % p for v in row) for row in a)


def mat_det(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def mat_inv_mod(a: Matrix, p: int) -> Matrix:
    """Inverse of a matrix over Z/pZ (raises if singular)."""
    n = len(a)
    aug = [[v % p for v in row] + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
        if pivot is None:
            raise ValueError("matrix is singular mod p")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_pow_mod(a: Matrix, exponent: int, p: int) -> Matrix:
    """Matrix power over Z/pZ, negative exponents via the mod-p inverse."""
    base = mat_mod(a, p) if exponent >= 0 else mat_inv_mod(a, p)
    result = identity_matrix(len(a))
    e = abs(exponent)
    while e:
        if e & 1:
            result = mat_mod(mat_mul(result, base), p)
        base = mat_mod(mat_mul(base, base), p)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Color transport
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColoringMatrix:
    """The integer transport matrix of a braid word.

    Always unimodular, and every row sums to 1 because constant colorings
    are fixed.
    """

    n: int
    entries: Matrix

    def __post_init__(self):
        if mat_det(self.entries) not in (1, -1):
            raise ValueError("transport matrix must be unimodular")
        for row in self.entries:
            if sum(row) != 1:
                raise ValueError("every row of a transport matrix must sum to 1")


def _letter_matrix(n: int, index: int, sign: int) -> Matrix:
    rows = [list(r) for r in identity_matrix(n)]
    i = index - 1
    if sign > 0:
        rows[i] = [0] * n
        rows[i][i + 1] = 1
        rows[i + 1] = [0] * n
        rows[i + 1][i] = -1
        rows[i + 1][i + 1] = 2
    else:
        rows[i] = [0] * n
        rows[i][i] = 2
        rows[i][i + 1] = -1
        rows[i + 1] = [0] * n
        rows[i + 1][i] = 1
    return tuple(tuple(r) for r in rows)


def coloring_matrix(word: BraidWord) -> ColoringMatrix:
    """Exact transport matrix of a word (letters compose anti-homomorphically)."""
    n = word.strands
    acc = identity_matrix(n)
    for index, sign in word.letters:
        acc = mat_mul(_letter_matrix(n, index, sign), acc)
    return ColoringMatrix(n, acc)


# ---------------------------------------------------------------------------
# Kernels over Z/pZ
# ---------------------------------------------------------------------------


def _kernel_basis(rows: list[list[int]], n: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Basis of the solution space of rows @ x = 0 over Z/pZ."""
    m = [[v % p for v in row] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(v - f * w) % p for v, w in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-m[r][fc]) % p
        basis.append(tuple(vec))
    return tuple(basis)


@dataclass(frozen=True)
class ColoringSpace:
    """An F_p basis of the joint coloring space of one or more words."""

    p: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.basis and _row_rank(self.basis, self.p) != len(self.basis):
            raise ValueError("coloring basis is linearly dependent")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def count(self) -> int:
        return self.p ** self.dimension


def _row_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[v % p for v in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(v - f * w) % p for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def coloring_kernel(words: Sequence[BraidWord], p: int) -> ColoringSpace:
    """Joint fixed space of the transport matrices of several words mod p."""
    _require_odd_prime(p)
    if not words:
        raise ValueError("need at least one word")
    n = words[0].strands
    if any(w.strands != n for w in words):
        raise ValueError("all words must share a strand count")
    rows: list[list[int]] = []
    for w in words:
        a = coloring_matrix(w).entries
        for i in range(n):
            rows.append([(a[i][j] - (1 if i == j else 0)) % p for j in range(n)])
    return ColoringSpace(p, n, _kernel_basis(rows, n, p))


def count_colorings_closure(word: BraidWord, p: int) -> int:
    """Number of p-colorings of the closure of a single word."""
    return coloring_kernel([word], p).count


def count_colorings_link(pair: CommutingPair, p: int) -> int:
    """Number of p-colorings of the torus-covering link of a commuting pair."""
    return coloring_kernel([pair.a, pair.b], p).count


# ---------------------------------------------------------------------------
# Closed-form counts for the two standard families
# ---------------------------------------------------------------------------


def sigma12_count_closed_form(n: int, p: int) -> int:
    """Colorings of the closure of (sigma_1 sigma_2)^n, in closed form.

    p^3 when n is divisible by 6 (the transport matrix has order 6 over Z),
    p^2 in the exceptional residues at p = 3, and p otherwise.
    """
    _require_odd_prime(p)
    r = n % 6
    if r == 0:
        return p ** 3
    if p == 3 and r in (2, 4):
        return p ** 2
    return p


@dataclass(frozen=True)
class QuadraticUnit:
    """An element x + y*eps of Z[eps]/(p) where eps^2 = eps + 1.

    eps is the golden-ratio unit; its square generates the eigenvalue of the
    transport matrix of sigma_1 sigma_2^-1 on the non-constant eigenplane.
    """

    p: int
    x: int
    y: int

    def __post_init__(self):
        _require_odd_prime(self.p)

    def __mul__(self, other: "QuadraticUnit") -> "QuadraticUnit":
        if not isinstance(other, QuadraticUnit) or other.p != self.p:
            return NotImplemented
        p = self.p
        x = (self.x * other.x + self.y * other.y) % p
        y = (self.x * other.y + self.y * other.x + self.y * other.y) % p
        return QuadraticUnit(p, x, y)

    @property
    def is_one(self) -> bool:
        return self.x == 1 and self.y == 0

    @staticmethod
    def one(p: int) -> "QuadraticUnit":
        return QuadraticUnit(p, 1, 0)

    @staticmethod
    def eps(p: int) -> "QuadraticUnit":
        return QuadraticUnit(p, 0, 1)

    @staticmethod
    def eps_inverse(p: int) -> "QuadraticUnit":
        # eps * (eps - 1) = eps^2 - eps = 1
        return QuadraticUnit(p, (-1) % p, 1)


def eps_power(exponent: int, p: int) -> QuadraticUnit:
    """eps^exponent mod p by square-and-multiply (negative exponents allowed)."""
    base = QuadraticUnit.eps(p) if exponent >= 0 else QuadraticUnit.eps_inverse(p)
    acc = QuadraticUnit.one(p)
    e = abs(exponent)
    while e:
        if e & 1:
            acc = acc * base
        base = base * base
        e >>= 1
    return acc


@dataclass(frozen=True)
class GoldenUnitReport:
    """Outcome of the unit criterion for (sigma_1 sigma_2^-1)^n closures."""

    unit_power: QuadraticUnit
    full_count: bool
    count_p3: int | None


def golden_unit_criterion(n: int, p: int) -> GoldenUnitReport:
    """Unit-power test for when the closure of (sigma_1 sigma_2^-1)^n has p^3 colorings.

    The count is p^3 exactly when eps^(2n) = 1 in Z[eps]/(p).  At p = 3 the
    exact count is also reported: 27 when n is divisible by 4, else 3.
    """
    _require_odd_prime(p)
    power = eps_power(2 * n, p)
    count = None
    if p == 3:
        count = 27 if n % 4 == 0 else 3
    return GoldenUnitReport(power, power.is_one, count)


def phi_p_exponent(p: int) -> int:
    """Exponent bound for the unit group of Z[eps]/(p), split by p mod 5."""
    _require_odd_prime(p)
    if p == 5:
        return p * (p - 1)
    if p % 5 in (1, 4):
        return (p - 1) ** 2
    return p * p - 1
