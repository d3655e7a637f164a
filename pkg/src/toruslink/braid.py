"""
Braid words on n strands and an exact solution of the word problem.

A word is a finite sequence of letters sigma_i^(+1) or sigma_i^(-1) with
1 <= i <= n-1.  Two conventions are fixed here once and relied on
everywhere else:

* Letters act on strand positions left to right.  ``permutation(w)``
  records, for each final position, which strand (numbered by its starting
  position) ends up there, so ``permutation(v * w) == permutation(v) *
  permutation(w)`` where ``*`` is ordinary composition, ``(f*g)(x) =
  f(g(x))``.

* ``full_twist(n)`` is the word (sigma_1 ... sigma_{n-1})^n.  It is central
  in the braid group and equals the square of the positive half twist.

Group-element equality is decided through the left-greedy Garside normal
form Delta^k P_1 ... P_r, where Delta is the positive half twist and each
P_j is a permutation braid (a positive braid in which any two strands
cross at most once).  The factor list is left-weighted: the starting set
of P_{j+1} is contained in the finishing set of P_j, and no factor is
trivial or Delta.  Two words represent the same group element iff these
data coincide.  This is exact for every n, unlike matrix representations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

Letter = tuple[int, int]  # (generator index in 1..n-1, sign +1 or -1)

TransformKind = Literal["inverse", "reverse", "mirror", "reverse_mirror"]


class WordSyntaxError(ValueError):
    """Raised when a braid-word string does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GeneratorRangeError(ValueError):
    """Raised when a generator index is out of range for the strand count."""

    def __init__(self, index: int, strands: int, position: int = -1):
        at = f" (at position {position})" if position >= 0 else ""
        super().__init__(
            f"generator s{index} needs at least {index + 1} strands, have {strands}{at}"
        )
        self.index = index
        self.position = position


class StrandMismatchError(ValueError):
    """Raised when an operation mixes words on different strand counts."""


class NonCommutingError(ValueError):
    """Raised when a pair of basis words fails the commutation check."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands.

    Words are immutable values; ``*`` concatenates and ``**`` repeats
    (negative powers repeat the inverse word).
    """

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for index, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
            if not 1 <= index <= self.strands - 1:
                raise GeneratorRangeError(index, self.strands)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise StrandMismatchError(
                f"cannot concatenate words on {self.strands} and {other.strands} strands"
            )
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else inverse(self)
        return BraidWord(self.strands, base.letters * abs(exponent))

    @staticmethod
    def identity(strands: int) -> "BraidWord":
        return BraidWord(strands, ())


def sigma(strands: int, index: int, sign: int = 1) -> BraidWord:
    """The single-letter word sigma_index^sign."""
    return BraidWord(strands, ((index, sign),))


def exponent_sum(word: BraidWord) -> int:
    """Sum of the letter signs (the image in the abelianization)."""
    return sum(sign for _, sign in word.letters)


def full_twist(strands: int) -> BraidWord:
    """The central full twist (sigma_1 ... sigma_{n-1})^n as an explicit word."""
    row = tuple((i, 1) for i in range(1, strands))
    return BraidWord(strands, row * strands)


def full_twist_power(strands: int, exponent: int) -> BraidWord:
    """The word for the full twist raised to any integer power."""
    return full_twist(strands) ** exponent


# ---------------------------------------------------------------------------
# Grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^(e|s(\d+)|D)(\^(-?\d+))?$")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse a braid word from the textual grammar.

    Tokens are whitespace separated.  ``e`` is the empty word, ``s<k>`` the
    k-th generator, ``D`` the full twist for the declared strand count; an
    optional ``^<z>`` repeats a token z times (negative z uses the inverse
    letter, so ``s3^-2`` means sigma_3^-1 sigma_3^-1).
    """
    if strands < 1:
        raise ValueError(f"strand count must be >= 1, got {strands}")
    letters: list[Letter] = []
    for match in re.finditer(r"\S+", text):
        token, position = match.group(), match.start()
        parsed = _TOKEN.match(token)
        if parsed is None:
            raise WordSyntaxError(f"bad token {token!r}", position)
        head, gen, _, exp = parsed.groups()
        if head == "e":
            if exp is not None:
                raise WordSyntaxError("'e' takes no exponent", position)
            continue
        exponent = 1 if exp is None else int(exp)
        if head == "D":
            letters.extend(full_twist_power(strands, exponent).letters)
            continue
        index = int(gen)
        if index < 1:
            raise WordSyntaxError(f"generator index must be >= 1 in {token!r}", position)
        if index > strands - 1:
            raise GeneratorRangeError(index, strands, position)
        sign = 1 if exponent >= 0 else -1
        letters.extend(((index, sign),) * abs(exponent))
    return BraidWord(strands, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Render a word back into the grammar (run-length encoded)."""
    if not word.letters:
        return "e"
    parts: list[str] = []
    run = [word.letters[0], 0]
    for letter in word.letters:
        if letter != run[0]:
            index, sign = run[0]
            total = sign * run[1]
            parts.append(f"s{index}" if total == 1 else f"s{index}^{total}")
            run = [letter, 0]
        run[1] += 1
    index, sign = run[0]
    total = sign * run[1]
    parts.append(f"s{index}" if total == 1 else f"s{index}^{total}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Structural transforms
# ---------------------------------------------------------------------------


def inverse(word: BraidWord) -> BraidWord:
    """The group inverse: reversed letter order with flipped signs."""
    return BraidWord(word.strands, tuple((i, -s) for i, s in reversed(word.letters)))


def reverse(word: BraidWord) -> BraidWord:
    """The orientation reversal: reversed letter order, signs kept."""
    return BraidWord(word.strands, tuple(reversed(word.letters)))


def mirror(word: BraidWord) -> BraidWord:
    """The mirror image: letter order kept, signs flipped."""
    return BraidWord(word.strands, tuple((i, -s) for i, s in word.letters))


def transform(word: BraidWord, kind: TransformKind) -> BraidWord:
    """Apply one of the four structural transforms by name.

    ``reverse_mirror`` composes reverse and mirror, which letterwise equals
    the group inverse.
    """
    if kind == "inverse":
        return inverse(word)
    if kind == "reverse":
        return reverse(word)
    if kind == "mirror":
        return mirror(word)
    if kind == "reverse_mirror":
        return inverse(word)
    raise ValueError(f"unknown transform kind {kind!r}")


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent sigma_i^e sigma_i^-e pairs until none remain."""
    stack: list[Letter] = []
    for letter in word.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(word.strands, tuple(stack))


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, value: int) -> int:
        return self.images[value - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Ordinary composition: (f * g)(x) = f(g(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for slot, value in enumerate(self.images, start=1):
            inv[value - 1] = slot
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, index: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[index - 1], images[index] = images[index], images[index - 1]
        return Permutation(tuple(images))


def permutation(word: BraidWord) -> Permutation:
    """The strand permutation: images[j-1] is the strand ending at position j.

    With this reading, permutation(v * w) == permutation(v) * permutation(w).
    """
    at = list(range(word.strands + 1))  # at[pos] = strand currently at pos
    for index, _ in word.letters:
        at[index], at[index + 1] = at[index + 1], at[index]
    return Permutation(tuple(at[1:]))


def is_pure(word: BraidWord) -> bool:
    """Whether the word induces the identity strand permutation."""
    return permutation(word).is_identity


# ---------------------------------------------------------------------------
# Garside normal form
#
# Internally permutation braids are handled as "route" tuples r, where
# r[i-1] is the position where the strand entering at position i leaves.
# The starting set of the braid of r is the descent set {i : r(i) > r(i+1)}
# and the finishing set is the descent set of the inverse route.
# ---------------------------------------------------------------------------


def _route_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _route_w0(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _route_transposition(n: int, index: int) -> tuple[int, ...]:
    images = list(range(1, n + 1))
    images[index - 1], images[index] = images[index], images[index - 1]
    return tuple(images)


def _route_compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """(f o g): apply g first."""
    return tuple(f[v - 1] for v in g)


def _route_flip(route: Sequence[int]) -> tuple[int, ...]:
    """Conjugation by the half twist: sends sigma_i to sigma_{n-i}."""
    n = len(route)
    return tuple(n + 1 - route[n - 1 - i] for i in range(n))


def _left_weight_pair(factors: list[list[int]], j: int, n: int) -> bool:
    """Transfer letters from factors[j+1] into factors[j] until the pair is
    left-weighted.  Returns whether anything moved."""
    pi, rho = factors[j], factors[j + 1]
    pos = [0] * (n + 1)
    for slot, value in enumerate(pi):
        pos[value] = slot
    changed = False
    while True:
        pick = 0
        for i in range(1, n):
            # i is in the starting set of rho but not the finishing set of pi
            if rho[i - 1] > rho[i] and pos[i] < pos[i + 1]:
                pick = i
                break
        if not pick:
            return changed
        changed = True
        a, b = pos[pick], pos[pick + 1]
        pi[a], pi[b] = pick + 1, pick
        pos[pick], pos[pick + 1] = b, a
        rho[pick - 1], rho[pick] = rho[pick], rho[pick - 1]


def _normalize_factors(n: int, power: int, factors: list[list[int]]) -> tuple[int, list[tuple[int, ...]]]:
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            if _left_weight_pair(factors, j, n):
                changed = True
    w0 = list(_route_w0(n))
    ident = list(_route_identity(n))
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == w0:
        lo += 1
        power += 1
    while lo < hi and factors[hi - 1] == ident:
        hi -= 1
    return power, [tuple(f) for f in factors[lo:hi]]


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy Garside data: half-twist power and permutation-braid factors.

    Factors are stored in the same convention as ``permutation``: each
    factor's images list, per final position, the strand ending there.
    """

    strands: int
    infimum: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def normal_form(word: BraidWord) -> NormalForm:
    """Compute the left-greedy Garside normal form of a word."""
    n = word.strands
    if n == 1:
        return NormalForm(1, 0, ())
    w0 = _route_w0(n)
    factors: list[list[int]] = []
    delta_before: list[int] = []  # half-twist power attached before each factor
    for index, sign in word.letters:
        if sign > 0:
            factors.append(list(_route_transposition(n, index)))
            delta_before.append(0)
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); the parenthesised part
            # is the permutation braid with route t_i o w0.
            factors.append(list(_route_compose(_route_transposition(n, index), w0)))
            delta_before.append(-1)
    # Push all Delta powers to the front; passing one Delta applies the flip.
    trailing = 0
    for j in range(len(factors) - 1, -1, -1):
        if trailing % 2:
            factors[j] = list(_route_flip(factors[j]))
        trailing += delta_before[j]
    power, routes = _normalize_factors(n, trailing, factors)
    perms = tuple(Permutation(r).inverse() for r in routes)
    return NormalForm(n, power, perms)


def _half_twist_letters(n: int) -> tuple[Letter, ...]:
    return _route_to_letters(_route_w0(n))


def _route_to_letters(route: Sequence[int]) -> tuple[Letter, ...]:
    """A positive word realising a permutation braid, via descent peeling."""
    n = len(route)
    r = list(route)
    letters: list[Letter] = []
    while True:
        for i in range(1, n):
            if r[i - 1] > r[i]:
                letters.append((i, 1))
                r[i - 1], r[i] = r[i], r[i - 1]
                break
        else:
            return tuple(letters)


def nf_to_word(nf: NormalForm) -> BraidWord:
    """A word representing the normal form (half-twist powers, then factors)."""
    n = nf.strands
    letters: list[Letter] = []
    if nf.infimum >= 0:
        letters.extend(_half_twist_letters(n) * nf.infimum)
    else:
        down = tuple((i, -s) for i, s in reversed(_half_twist_letters(n)))
        letters.extend(down * (-nf.infimum))
    for factor in nf.factors:
        letters.extend(_route_to_letters(factor.inverse().images))
    return BraidWord(n, tuple(letters))


def equivalent(a: BraidWord, b: BraidWord) -> bool:
    """Whether two words represent the same braid-group element."""
    if a.strands != b.strands:
        raise StrandMismatchError(
            f"cannot compare words on {a.strands} and {b.strands} strands"
        )
    return normal_form(a) == normal_form(b)


def commutes(a: BraidWord, b: BraidWord) -> bool:
    """Whether ab = ba in the braid group (decided via normal forms)."""
    if a.strands != b.strands:
        raise StrandMismatchError(
            f"cannot test commutation across {a.strands} and {b.strands} strands"
        )
    return normal_form(a * b) == normal_form(b * a)


@dataclass(frozen=True)
class CommutingPair:
    """A validated pair of commuting basis words defining a torus-covering link."""

    a: BraidWord
    b: BraidWord

    def __post_init__(self):
        if self.a.strands != self.b.strands:
            raise StrandMismatchError(
                f"basis words live on {self.a.strands} and {self.b.strands} strands"
            )
        if not commutes(self.a, self.b):
            raise NonCommutingError(
                f"words do not commute: {format_word(self.a)!r}, {format_word(self.b)!r}"
            )

    @property
    def strands(self) -> int:
        return self.a.strands
