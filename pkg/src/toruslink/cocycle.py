"""
Dihedral quandle cocycle invariants in exact cyclotomic arithmetic.

The degree-3 cocycle on Z/pZ used throughout is

    theta_p(s, t, u) = (s - t) * ((2u - t)^p + t^p - 2 u^p) / p   mod p,

the generator of the cyclic group of 3-cocycles of the dihedral quandle.
The numerator is evaluated mod p^2 by modular exponentiation, its
divisibility by p asserted, and the quotient reduced mod p.

Crossing-weight sums over shadow-colored closed-braid diagrams produce the
cocycle invariant of the twist-family links S(a, full_twist^m): the
invariant is the multiset of -m*n*Psi(a^; C, 0) over all colorings C,
valid whenever the full-twist transport matrix to the m-th power is the
identity mod p.  For strand-power words the same multiset has a quadratic
closed form, and its value at a primitive p-th root of unity collapses to
a product of quadratic Gauss sums - all represented exactly in Z[zeta_p]
(never as floating-point radicals: eps_p * sqrt(p) is stored as the brute
Gauss sum G(1, p) itself).

Conventions for the shadow weights (region enumeration left to right,
weight -e * theta(region above the crossing, under-color in, over-color))
live in toruslink._shadow; the sign is pinned by the cross-checks between
the enumerated and closed-form multisets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Mapping, Sequence

from ._shadow import psi_walk, weight_histogram
from .braid import BraidWord, full_twist
from .coloring import (
    _require_odd_prime,
    coloring_kernel,
    coloring_matrix,
    identity_matrix,
    mat_mod,
    mat_pow_mod,
)


class HypothesisViolationError(ValueError):
    """Raised when the full-twist transport hypothesis fails for a twist family."""

    def __init__(self, message: str, matrix=None):
        super().__init__(message)
        self.matrix = matrix


def legendre(nu: int, p: int) -> int:
    """Legendre symbol (nu/p) in {-1, 0, +1} by Euler's criterion."""
    _require_odd_prime(p)
    r = pow(nu % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


# ---------------------------------------------------------------------------
# Z[zeta_p]
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^(p-2).

    zeta^(p-1) is always rewritten as -(1 + zeta + ... + zeta^(p-2)), so
    equality is coefficient-wise.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _require_odd_prime(self.p)
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coefficients, got {len(self.coeffs)}")

    @staticmethod
    def from_int(p: int, value: int) -> "CyclotomicInt":
        return CyclotomicInt(p, (value,) + (0,) * (p - 2))

    @staticmethod
    def zero(p: int) -> "CyclotomicInt":
        return CyclotomicInt.from_int(p, 0)

    @staticmethod
    def zeta_power(p: int, exponent: int) -> "CyclotomicInt":
        vec = [0] * p
        vec[exponent % p] = 1
        return _from_exponent_vector(p, vec)

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt(self.p, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check(other)
        p = self.p
        vec = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        vec[(i + j) % p] += a * b
        return _from_exponent_vector(p, vec)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclotomicInt":
        if exponent < 0:
            raise ValueError("negative powers are not defined in Z[zeta_p]")
        acc = CyclotomicInt.from_int(self.p, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugation, zeta -> zeta^(p-1)."""
        vec = [0] * self.p
        for j, a in enumerate(self.coeffs):
            vec[(-j) % self.p] += a
        return _from_exponent_vector(self.p, vec)

    @property
    def is_rational(self) -> bool:
        return all(a == 0 for a in self.coeffs[1:])

    def _check(self, other: "CyclotomicInt") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed cyclotomic orders {self.p} and {other.p}")


def _from_exponent_vector(p: int, vec: Sequence[int]) -> CyclotomicInt:
    """Reduce an exponent-indexed length-p vector into the power basis."""
    top = vec[p - 1]
    return CyclotomicInt(p, tuple(vec[j] - top for j in range(p - 1)))


GaussMethod = Literal["brute", "closed"]


def gauss_sum(nu: int, p: int, method: GaussMethod = "brute") -> CyclotomicInt:
    """The quadratic Gauss sum G(nu, p) = sum_j zeta^(nu j^2), exactly.

    The closed method returns p when p | nu and otherwise the Legendre
    symbol times G(1, p); both methods agree coefficient-wise.
    """
    _require_odd_prime(p)
    if method == "brute":
        vec = [0] * p
        for j in range(p):
            vec[(nu * j * j) % p] += 1
        return _from_exponent_vector(p, vec)
    if method == "closed":
        if nu % p == 0:
            return CyclotomicInt.from_int(p, p)
        return legendre(nu, p) * gauss_sum(1, p, "brute")
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# The cocycle
# ---------------------------------------------------------------------------


def mochizuki(s: int, t: int, u: int, p: int) -> int:
    """theta_p(s, t, u), evaluated mod p^2 with an asserted division by p."""
    _require_odd_prime(p)
    p2 = p * p
    s, t, u = s % p, t % p, u % p
    inner = (pow((2 * u - t) % p2, p, p2) + pow(t, p, p2) - 2 * pow(u, p, p2)) % p2
    if inner % p:
        raise AssertionError("cocycle numerator not divisible by p")
    return ((s - t) * (inner // p)) % p


@lru_cache(maxsize=None)
def theta_table(p: int) -> tuple[int, ...]:
    """Flat p^3 table of mochizuki values, indexed [(s*p + t)*p + u]."""
    return tuple(
        mochizuki(s, t, u, p) for s in range(p) for t in range(p) for u in range(p)
    )


# ---------------------------------------------------------------------------
# Shadow colorings of closed braids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShadowColoring:
    """A coloring of a closed braid plus a base color for the unbounded region.

    The arc colors fix the strand colors at the top of the braid and must
    be a coloring of the closure (a fixed vector of the transport matrix
    mod p); the region colors are then determined by the reflection rule
    r_k = 2 * (arc color at position k) - r_{k-1}.
    """

    p: int
    arc_colors: tuple[int, ...]
    base: int = 0

    def __post_init__(self):
        _require_odd_prime(self.p)


def shadow_invariant(word: BraidWord, coloring: ShadowColoring) -> int:
    """Crossing-weight sum of the shadow-colored closure, mod p.

    The coloring must be valid for the closure of the word (checked).
    """
    p = coloring.p
    if len(coloring.arc_colors) != word.strands:
        raise ValueError("arc color count must match the strand count")
    a = mat_mod(coloring_matrix(word).entries, p)
    col = [c % p for c in coloring.arc_colors]
    transported = [sum(a[i][j] * col[j] for j in range(word.strands)) % p
                   for i in range(word.strands)]
    if transported != col:
        raise ValueError("arc colors are not a coloring of the closure")
    return psi_walk(p, word.letters, col, coloring.base, theta_table(p))


@dataclass(frozen=True)
class WeightMultiset:
    """A multiset of mod-p weight values, stored as sorted (value, count) pairs."""

    p: int
    counts: tuple[tuple[int, int], ...]

    @staticmethod
    def from_values(p: int, values: Iterable[int]) -> "WeightMultiset":
        acc: dict[int, int] = {}
        for v in values:
            acc[v % p] = acc.get(v % p, 0) + 1
        return WeightMultiset.from_counts(p, acc)

    @staticmethod
    def from_counts(p: int, counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> "WeightMultiset":
        items = counts.items() if isinstance(counts, Mapping) else counts
        acc: dict[int, int] = {}
        for v, c in items:
            if c < 0:
                raise ValueError("multiplicities must be non-negative")
            if c:
                acc[v % p] = acc.get(v % p, 0) + c
        return WeightMultiset(p, tuple(sorted(acc.items())))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def multiplicity(self, value: int) -> int:
        value %= self.p
        for v, c in self.counts:
            if v == value:
                return c
        return 0

    def to_polynomial(self) -> "PhiPolynomial":
        coeffs = [0] * self.p
        for v, c in self.counts:
            coeffs[v] = c
        return PhiPolynomial(self.p, tuple(coeffs))

    def zeta_evaluation(self) -> CyclotomicInt:
        vec = [0] * self.p
        for v, c in self.counts:
            vec[v] += c
        return _from_exponent_vector(self.p, vec)


def phi_via_shadow(a: BraidWord, m: int, p: int) -> WeightMultiset:
    """Cocycle invariant of the twist-family link S(a, full_twist^m).

    Enumerates every coloring of the closure of ``a`` and collects
    -m * n * Psi(a^; C, 0) mod p.  Requires the transport matrix of the
    full twist, raised to the m-th power, to be the identity mod p; the
    failing matrix is attached to the error otherwise.
    """
    _require_odd_prime(p)
    n = a.strands
    twist = mat_mod(coloring_matrix(full_twist(n)).entries, p)
    powered = mat_pow_mod(twist, m, p)
    if powered != identity_matrix(n):
        raise HypothesisViolationError(
            f"full-twist transport to the power {m} is not the identity mod {p}",
            matrix=powered,
        )
    space = coloring_kernel([a], p)
    hist = weight_histogram(p, n, a.letters, space.basis, theta_table(p), 0)
    scale = (-m * n) % p
    counts: dict[int, int] = {}
    for psi, cnt in enumerate(hist):
        if cnt:
            v = (scale * psi) % p
            counts[v] = counts.get(v, 0) + cnt
    return WeightMultiset.from_counts(p, counts)


def phi_closed_multiset(nus: Sequence[int], m: int, n: int, p: int) -> WeightMultiset:
    """Closed-form cocycle invariant multiset for strand-power words.

    For odd n this is {2 m n sum_i nu_i x_i^2 : x in F_p^(n-1)} with every
    value repeated p times (the twist exponent being 2m); for even n (twist
    exponent p*m) it is p^n copies of zero.
    """
    _require_odd_prime(p)
    if n < 2:
        raise ValueError("need at least 2 strands")
    if len(nus) != n - 1:
        raise ValueError(f"need {n - 1} exponent sums, got {len(nus)}")
    if n % 2 == 0:
        return WeightMultiset.from_counts(p, {0: p**n})
    scale = (2 * m * n) % p
    reduced = [nu % p for nu in nus]
    counts: dict[int, int] = {}
    # distribution of a diagonal quadratic form, built one variable at a time
    dist = {0: 1}
    for nu in reduced:
        nxt: dict[int, int] = {}
        for x in range(p):
            term = (nu * x * x) % p
            for v, c in dist.items():
                key = (v + term) % p
                nxt[key] = nxt.get(key, 0) + c
        dist = nxt
    for v, c in dist.items():
        counts[(scale * v) % p] = counts.get((scale * v) % p, 0) + c * p
    return WeightMultiset.from_counts(p, counts)


# ---------------------------------------------------------------------------
# Reduced invariant and polynomial forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReducedInvariant:
    """The cocycle invariant evaluated at zeta_p, with its obstruction flag.

    ``obstruction`` is true exactly when the value differs from its complex
    conjugate (p = 3 mod 4 and an odd number of active exponents), which
    certifies the link is not (-)-amphicheiral.
    """

    value: CyclotomicInt
    active: tuple[int, ...]
    obstruction: bool


def reduced_phi(nus: Sequence[int], m: int, n: int, p: int) -> ReducedInvariant:
    """Reduced invariant p^(n-#J) * prod legendre(2mn nu_i, p) * G(1,p)^#J.

    J (the ``active`` index set, 1-based) collects the i with 2 m n nu_i
    nonzero mod p.  The value is exact in Z[zeta_p] and equals the zeta
    evaluation of the closed-form multiset.
    """
    _require_odd_prime(p)
    if n % 2 == 0:
        raise ValueError("reduced invariant is stated for odd strand counts")
    if len(nus) != n - 1:
        raise ValueError(f"need {n - 1} exponent sums, got {len(nus)}")
    active = tuple(i + 1 for i, nu in enumerate(nus) if (2 * m * n * nu) % p)
    sign = 1
    for i in active:
        sign *= legendre(2 * m * n * nus[i - 1], p)
    g1 = gauss_sum(1, p, "brute")
    value = CyclotomicInt.from_int(p, sign * p ** (n - len(active)))
    value = value * g1 ** len(active)
    obstruction = p % 4 == 3 and len(active) % 2 == 1
    return ReducedInvariant(value, active, obstruction)


@dataclass(frozen=True)
class PhiPolynomial:
    """The cocycle invariant as sum_C v^(weight of C) in Z[v]/(v^p - 1)."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _require_odd_prime(self.p)
        if len(self.coeffs) != self.p:
            raise ValueError(f"need {self.p} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients count colorings and must be non-negative")

    @property
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs)

    def evaluate_at_zeta(self) -> CyclotomicInt:
        return _from_exponent_vector(self.p, list(self.coeffs))

    def to_multiset(self) -> WeightMultiset:
        return WeightMultiset.from_counts(self.p, dict(enumerate(self.coeffs)))


def recover_phi_polynomial(count: int, reduced: CyclotomicInt) -> PhiPolynomial:
    """Rebuild the polynomial invariant from (value at 1, value at zeta_p).

    The pair is in the image of the evaluation embedding exactly when
    count - sum(coeffs) is divisible by p; the inverse formula adds the
    constant (count - sum)/p to every power of v.
    """
    p = reduced.p
    total = sum(reduced.coeffs)
    if (count - total) % p:
        raise ValueError("pair is not in the image of the evaluation embedding")
    shift = (count - total) // p
    coeffs = [c + shift for c in reduced.coeffs] + [shift]
    return PhiPolynomial(p, tuple(coeffs))


def phi_n3_polynomial(nu1: int, nu2: int, m: int, p: int) -> PhiPolynomial:
    """Closed-form polynomial invariant of the degree-3 twist family.

    Requires p to not divide 6m.  Four branches, split on which of the
    exponent sums vanish mod p and on the quadratic character of
    -nu1*nu2.
    """
    _require_odd_prime(p)
    if (6 * m) % p == 0:
        raise ValueError(f"{p} divides 6m; the closed form needs p coprime to 6m")
    r1, r2 = nu1 % p, nu2 % p
    if r1 == 0 and r2 == 0:
        return PhiPolynomial(p, (p**3,) + (0,) * (p - 1))
    if r1 != 0 and r2 != 0:
        if legendre(-nu1 * nu2, p) == 1:
            head, tail = p * (2 * p - 1), p * (p - 1)
        else:
            head, tail = p, p * (p + 1)
        return PhiPolynomial(p, (head,) + (tail,) * (p - 1))
    live = nu1 if r1 != 0 else nu2
    coeffs = tuple(p * p * (1 + legendre(6 * m * live * j, p)) for j in range(p))
    return PhiPolynomial(p, coeffs)
