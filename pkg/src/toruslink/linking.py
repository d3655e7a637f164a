"""
Linking data of closed pure braids and triple linking of torus-covering links.

For a pure word the closure has one component per strand, numbered by
starting position.  Each letter sigma_k^e is a crossing between the two
strands currently at positions k, k+1 and contributes e to their signed
crossing count; the pairwise linking number is half that signed count
(always an integer for pure words, asserted).

For a degree-3 link built from a commuting pure pair (a, b) the triple
linking numbers are the negated cross product of the linking vectors of
the two closures, taken in the component order (Lk_31, Lk_12, Lk_23).
The same data in exponent coordinates: writing a pure 3-braid as a word
in Sigma_1 = sigma_1^2, Sigma_2 = sigma_2^2 and the full twist, with
algebraic exponent sums (alpha, beta, delta), the linking vector is
UZ_MATRIX @ (alpha, beta, delta).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .braid import BraidWord, CommutingPair, inverse, is_pure, mirror, reverse


class NotPureError(ValueError):
    """Raised when an operation needs a pure word but the permutation is not trivial."""


UZ_MATRIX = ((0, 0, 1), (1, 0, 1), (0, 1, 1))
UZ_MATRIX_INV = ((-1, 1, 0), (-1, 0, 1), (1, 0, 0))


@dataclass(frozen=True)
class LinkingProfile:
    """Pairwise linking numbers of the closure of a pure word."""

    n: int
    pairs: tuple[tuple[tuple[int, int], int], ...]  # ((i, j) with i < j, value)

    def lk(self, i: int, j: int) -> int:
        """Linking number between components i and j (symmetric, 0 for i == j)."""
        if i == j:
            return 0
        key = (min(i, j), max(i, j))
        for pair, value in self.pairs:
            if pair == key:
                return value
        raise KeyError(f"no components {key} in a {self.n}-component profile")

    @property
    def triple(self) -> tuple[int, int, int]:
        """The degree-3 vector (Lk_31, Lk_12, Lk_23)."""
        if self.n != 3:
            raise ValueError("canonical triple only defined for 3 strands")
        return (self.lk(3, 1), self.lk(1, 2), self.lk(2, 3))


def linking_profile(word: BraidWord) -> LinkingProfile:
    """Pairwise linking numbers of the closure of a pure word."""
    if not is_pure(word):
        raise NotPureError("linking profile needs a pure word")
    n = word.strands
    labels = list(range(n + 1))  # labels[pos] = component currently at pos
    counts: dict[tuple[int, int], int] = {
        (i, j): 0 for i in range(1, n + 1) for j in range(i + 1, n + 1)
    }
    for index, sign in word.letters:
        i, j = labels[index], labels[index + 1]
        counts[(min(i, j), max(i, j))] += sign
        labels[index], labels[index + 1] = labels[index + 1], labels[index]
    pairs = []
    for key in sorted(counts):
        total = counts[key]
        if total % 2:
            raise AssertionError(f"odd signed crossing count {total} for pair {key}")
        pairs.append((key, total // 2))
    return LinkingProfile(n, tuple(pairs))


@dataclass(frozen=True)
class UZExponents:
    """Exponent sums (alpha, beta, delta) of a pure 3-braid in the
    Sigma_1 / Sigma_2 / full-twist decomposition."""

    alpha: int
    beta: int
    delta: int


def uz_exponents(word: BraidWord) -> UZExponents:
    """Recover (alpha, beta, delta) from the linking triple via UZ_MATRIX_INV."""
    if word.strands != 3:
        raise ValueError("exponent decomposition is for 3-strand words")
    lk31, lk12, lk23 = linking_profile(word).triple
    return UZExponents(alpha=lk12 - lk31, beta=lk23 - lk31, delta=lk31)


def _cross(u: tuple[int, int, int], v: tuple[int, int, int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class TripleLinking:
    """Triple linking numbers (Tlk_123, Tlk_231, Tlk_312) of a degree-3 link."""

    t123: int
    t231: int
    t312: int

    @property
    def as_tuple(self) -> tuple[int, int, int]:
        return (self.t123, self.t231, self.t312)


def _require_pure_pair(pair: CommutingPair) -> None:
    if not (is_pure(pair.a) and is_pure(pair.b)):
        raise NotPureError("triple linking needs pure basis words")


def triple_linking(pair: CommutingPair) -> TripleLinking:
    """Triple linking numbers of the degree-3 link of a pure commuting pair."""
    if pair.strands != 3:
        raise ValueError("use triple_linking_tensor for more than 3 strands")
    _require_pure_pair(pair)
    u = linking_profile(pair.a).triple
    v = linking_profile(pair.b).triple
    c = _cross(u, v)
    return TripleLinking(-c[0], -c[1], -c[2])


def triple_linking_tensor(pair: CommutingPair) -> dict[tuple[int, int, int], int]:
    """All triple linking numbers Tlk_{i,j,k} of a pure commuting pair (n >= 3).

    Entrywise: Tlk_{i,j,k} = -Lk_{i,j}(a^) Lk_{j,k}(b^) + Lk_{i,j}(b^) Lk_{j,k}(a^),
    which vanishes when indices repeat and is antisymmetric under (i,k) swap.
    """
    if pair.strands < 3:
        raise ValueError("triple linking needs at least 3 strands")
    _require_pure_pair(pair)
    la = linking_profile(pair.a)
    lb = linking_profile(pair.b)
    n = pair.strands
    tensor: dict[tuple[int, int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if i == j or j == k:
                    tensor[(i, j, k)] = 0
                else:
                    tensor[(i, j, k)] = -la.lk(i, j) * lb.lk(j, k) + lb.lk(i, j) * la.lk(j, k)
    return tensor


def triple_linking_variant(pair: CommutingPair, variant: str) -> TripleLinking:
    """Triple linking of the reversed, mirrored, or reversed-mirrored link.

    The variant link is presented by transformed basis words (reverse uses
    (-a, b*), mirror uses (a*, b*), reverse_mirror uses (a^-1, b)), and the
    result equals (-t, t, -t) respectively relative to the base pair.
    """
    if variant == "reverse":
        transformed = CommutingPair(reverse(pair.a), mirror(pair.b))
    elif variant == "mirror":
        transformed = CommutingPair(mirror(pair.a), mirror(pair.b))
    elif variant == "reverse_mirror":
        transformed = CommutingPair(inverse(pair.a), pair.b)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return triple_linking(transformed)


@dataclass(frozen=True)
class ChiralityWitness:
    """Which hypotheses of the chirality test held."""

    nontrivial_linking: bool
    nonproportional: bool
    renumbering_clause: bool

    @property
    def failed(self) -> tuple[str, ...]:
        out = []
        if not self.nontrivial_linking:
            out.append("a closure has trivial linking numbers")
        if not self.nonproportional:
            out.append("linking vectors are proportional")
        if not self.renumbering_clause:
            out.append("a component renumbering equalises both linking vectors")
        return tuple(out)


@dataclass(frozen=True)
class ChiralityCertificate:
    applies: bool
    conclusion: str | None
    witness: ChiralityWitness


def chirality_certificate(pair: CommutingPair) -> ChiralityCertificate:
    """Certificate that a degree-3 link is neither reversible nor
    (-)-amphicheiral, decided exactly from the two linking vectors.

    Three hypotheses are evaluated: both closures have some non-zero
    linking number; the two integer linking vectors are not real multiples
    of each other (decided by cross products, no floating point); and for
    every ordering (i, j, k) of the components, Lk_ij != Lk_jk holds for at
    least one of the two closures.
    """
    if pair.strands != 3:
        raise ValueError("chirality certificate is for degree 3")
    _require_pure_pair(pair)
    la = linking_profile(pair.a)
    lb = linking_profile(pair.b)
    u, v = la.triple, lb.triple

    nontrivial = any(u) and any(v)
    # With both vectors non-zero, u = lambda * v for a real lambda != 0
    # exactly when the cross product vanishes.
    nonproportional = nontrivial and _cross(u, v) != (0, 0, 0)
    renumbering = all(
        la.lk(i, j) != la.lk(j, k) or lb.lk(i, j) != lb.lk(j, k)
        for (i, j, k) in iter_permutations((1, 2, 3))
    )
    witness = ChiralityWitness(nontrivial, nonproportional, renumbering)
    applies = nontrivial and nonproportional and renumbering
    conclusion = "neither reversible nor (-)-amphicheiral" if applies else None
    return ChiralityCertificate(applies, conclusion, witness)
