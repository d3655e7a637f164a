"""
Equivalence moves on degree-3 torus-covering links and their classification.

The move alphabet on commuting pairs (a, b):

    E1: (a, b) -> (a^-1, b^-1)
    E2: (a, b) -> (c^-1 a c, c^-1 b c)        for any conjugator word c
    E3: (a, b) -> (b^-1, a)
    E4: (a, b) -> (a, a^(2s) b)               s = +-1
    Q1: (a, b) -> (a, a^s b)                  s = +-1
    Q2: (a, D^m) -> (a D^(2s), D^m)           s = +-1
    Q3: (a, D^m) -> (a, D^(m + 2s))           s = +-1
    Q4: (a, D^m) -> (a', D^m)                 a' in the residue class of a

where D is the full twist.  Q2-Q4 are only offered when b is letterwise a
full-twist power, and Q4's residue class reduces the exponents of the
alternating sigma_1/sigma_2 power form modulo 3, the modulus of
tri-colorings.  The number of tri-colorings is constant along every move
and equals the cocycle invariant of the link, always 27, 9 or 3.

The pure-exponent structure of commuting 3-braids (every commuting pair is
(c^l1 D^m1, c^l2 D^m2)) is recovered through the central quotient of the
3-strand group, the free product Z/2 * Z/3 on x = s1 s2 s1 and y = s1 s2:
images are cyclically reduced, a primitive root is extracted by syllable
period detection, exponents are matched by direct powering, and the root
is lifted back fixing the twist exponents through exponent sums (the full
twist has exponent sum 6).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .braid import (
    BraidWord,
    CommutingPair,
    NormalForm,
    exponent_sum,
    format_word,
    free_reduce,
    full_twist_power,
    inverse,
    nf_to_word,
    normal_form,
    sigma,
)
from .coloring import count_colorings_link
from .cocycle import PhiPolynomial


class InapplicableMoveError(ValueError):
    """Raised when a move's side conditions fail for the given pair."""


class DecompositionError(RuntimeError):
    """Raised when no common-root decomposition is found (signals a bug or
    non-commuting input)."""


# ---------------------------------------------------------------------------
# Full-twist power recognition and the residue bracket
# ---------------------------------------------------------------------------


def full_twist_exponent(word: BraidWord) -> int | None:
    """The m with word letterwise equal to full_twist^m, or None."""
    n = word.strands
    per = n * (n - 1)
    if per == 0:
        return 0 if not word.letters else None
    total = exponent_sum(word)
    if total % per or len(word.letters) != abs(total):
        return None
    m = total // per
    if word.letters == full_twist_power(n, m).letters:
        return m
    return None


def _syllables(word: BraidWord) -> list[tuple[int, int]]:
    """Merge letters into (generator, exponent) syllables with free reduction."""
    stack: list[list[int]] = []
    for index, sign in word.letters:
        if stack and stack[-1][0] == index:
            stack[-1][1] += sign
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([index, sign])
    return [(i, e) for i, e in stack]


def _word_from_syllables(strands: int, sylls: list[tuple[int, int]]) -> BraidWord:
    letters: list[tuple[int, int]] = []
    for index, e in sylls:
        letters.extend(((index, 1 if e > 0 else -1),) * abs(e))
    return BraidWord(strands, tuple(letters))


def bracket_reduce(word: BraidWord, p: int) -> BraidWord:
    """Canonical representative of the residue class of an alternating
    power word: every exponent replaced by its least-absolute residue mod p,
    with vanished syllables merged away and re-reduced to a fixpoint."""
    if word.strands != 3:
        raise ValueError("the residue bracket is defined for 3-strand words")
    if p < 2:
        raise ValueError("modulus must be at least 2")
    sylls = _syllables(word)
    half = p // 2
    while True:
        reduced = []
        for index, e in sylls:
            r = e % p
            if r > half:
                r -= p
            if r:
                reduced.append((index, r))
        merged = _syllables(_word_from_syllables(3, reduced))
        if merged == sylls:
            return _word_from_syllables(3, merged)
        sylls = merged


def in_same_bracket(a: BraidWord, b: BraidWord, p: int) -> bool:
    """Whether two alternating power words have the same residue reduction."""
    return bracket_reduce(a, p).letters == bracket_reduce(b, p).letters


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QdlMove:
    """One move application.  ``sign`` directs E4/Q1/Q2/Q3; ``conjugator``
    feeds E2 and ``replacement`` feeds Q4."""

    tag: str
    sign: int = 1
    conjugator: BraidWord | None = None
    replacement: BraidWord | None = None


def apply_move(pair: CommutingPair, move: QdlMove) -> CommutingPair:
    """Apply a move; the result is revalidated for commutation."""
    a, b = pair.a, pair.b
    tag = move.tag
    if move.sign not in (1, -1):
        raise InapplicableMoveError(f"sign must be +-1, got {move.sign}")
    if tag == "E1":
        return CommutingPair(inverse(a), inverse(b))
    if tag == "E2":
        if move.conjugator is None:
            raise InapplicableMoveError("E2 needs a conjugator word")
        c = move.conjugator
        return CommutingPair(
            free_reduce(inverse(c) * a * c), free_reduce(inverse(c) * b * c)
        )
    if tag == "E3":
        return CommutingPair(inverse(b), a)
    if tag == "E4":
        return CommutingPair(a, free_reduce((a ** (2 * move.sign)) * b))
    if tag == "Q1":
        return CommutingPair(a, free_reduce((a ** move.sign) * b))
    if tag in ("Q2", "Q3", "Q4"):
        if pair.strands != 3:
            raise InapplicableMoveError(f"{tag} is defined for 3-strand pairs")
        m = full_twist_exponent(b)
        if m is None:
            raise InapplicableMoveError(f"{tag} needs the second word to be a full-twist power")
        if tag == "Q2":
            return CommutingPair(a * full_twist_power(3, 2 * move.sign), b)
        if tag == "Q3":
            return CommutingPair(a, full_twist_power(3, m + 2 * move.sign))
        if move.replacement is None:
            raise InapplicableMoveError("Q4 needs a replacement word")
        if not in_same_bracket(a, move.replacement, 3):
            raise InapplicableMoveError("Q4 replacement is not in the residue class")
        return CommutingPair(move.replacement, b)
    raise InapplicableMoveError(f"unknown move tag {tag!r}")


# ---------------------------------------------------------------------------
# Commuting-pair decomposition through the central quotient
# ---------------------------------------------------------------------------

# Syllables of the free product: ("x", 1) of order 2, ("y", 1 or 2) of order 3.
_FP = tuple[tuple[str, int], ...]

_ORDER = {"x": 2, "y": 3}

_LETTER_IMAGES: dict[tuple[int, int], _FP] = {
    (1, 1): (("y", 2), ("x", 1)),   # s1   = y^-1 x
    (1, -1): (("x", 1), ("y", 1)),  # s1^-1 = x^-1 y = x y
    (2, 1): (("x", 1), ("y", 2)),   # s2   = x^-1 y^2
    (2, -1): (("y", 1), ("x", 1)),  # s2^-1 = y^-2 x = y x
}


def _fp_reduce(syllables) -> _FP:
    stack: list[list] = []
    for kind, e in syllables:
        if stack and stack[-1][0] == kind:
            stack[-1][1] = (stack[-1][1] + e) % _ORDER[kind]
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([kind, e % _ORDER[kind]])
            if stack[-1][1] == 0:
                stack.pop()
    return tuple((k, e) for k, e in stack)


def _fp_mul(a: _FP, b: _FP) -> _FP:
    return _fp_reduce(list(a) + list(b))


def _fp_inv(a: _FP) -> _FP:
    return _fp_reduce([(k, _ORDER[k] - e) for k, e in reversed(a)])


def _fp_pow(a: _FP, e: int) -> _FP:
    base = a if e >= 0 else _fp_inv(a)
    out: _FP = ()
    for _ in range(abs(e)):
        out = _fp_mul(out, base)
    return out


def _fp_image(word: BraidWord) -> _FP:
    sylls: list[tuple[str, int]] = []
    for letter in word.letters:
        sylls.extend(_LETTER_IMAGES[letter])
    return _fp_reduce(sylls)


def _cyclic_reduce(w: _FP) -> tuple[_FP, _FP]:
    """Return (core, u) with w = u^-1 core u and core cyclically reduced."""
    core, u = w, ()
    while len(core) >= 2 and core[0][0] == core[-1][0]:
        g: _FP = (core[-1],)
        core = _fp_mul(g, core[:-1])
        u = _fp_mul(g, u)
    return core, u


def _primitive_root(core: _FP) -> tuple[_FP, int]:
    """Primitive root r and exponent e >= 1 with core = r^e, for core != 1."""
    if len(core) == 1:
        kind, e = core[0]
        if kind == "x":
            return core, 1
        return ((("y", 1),), e)
    length = len(core)
    for d in range(2, length + 1, 2):
        if length % d:
            continue
        pattern = core[:d]
        if pattern * (length // d) == core:
            return pattern, length // d
    raise DecompositionError("no syllable period found")  # unreachable


def _fp_log(target: _FP, root: _FP) -> int | None:
    """Smallest-|l| exponent with root^l == target, or None."""
    bound = len(target) + len(root) + 4
    if target == ():
        return 0
    acc_pos: _FP = ()
    acc_neg: _FP = ()
    inv = _fp_inv(root)
    for l in range(1, bound + 1):
        acc_pos = _fp_mul(acc_pos, root)
        if acc_pos == target:
            return l
        acc_neg = _fp_mul(acc_neg, inv)
        if acc_neg == target:
            return -l
    return None


_LIFTS = {
    ("x", 1): ((1, 1), (2, 1), (1, 1)),
    ("y", 1): ((1, 1), (2, 1)),
    ("y", 2): ((1, 1), (2, 1), (1, 1), (2, 1)),
}


def _lift(element: _FP) -> BraidWord:
    letters: list[tuple[int, int]] = []
    for syll in element:
        letters.extend(_LIFTS[syll])
    return BraidWord(3, tuple(letters))


_PAIR_LETTERS = {
    (("y", 2), ("x", 1)): (1, 1),
    (("y", 1), ("x", 1)): (2, -1),
    (("x", 1), ("y", 1)): (1, -1),
    (("x", 1), ("y", 2)): (2, 1),
}


def _alternating_spelling(element: _FP) -> BraidWord | None:
    """A one-letter-per-syllable-pair word equal to the element mod center."""
    if len(element) % 2:
        return None
    letters = []
    for i in range(0, len(element), 2):
        letters.append(_PAIR_LETTERS[(element[i], element[i + 1])])
    return BraidWord(3, tuple(letters))


@dataclass(frozen=True)
class B3Decomposition:
    """Common-root presentation a = c^l1 D^m1, b = c^l2 D^m2 of a commuting pair."""

    c: BraidWord
    l1: int
    l2: int
    m1: int
    m2: int


def _twist_exponent_for(word: BraidWord, root: BraidWord, l: int) -> int:
    diff = exponent_sum(word) - l * exponent_sum(root)
    if diff % 6:
        raise DecompositionError("residual central part has exponent sum not divisible by 6")
    return diff // 6


def _root_sort_key(nf: NormalForm) -> tuple:
    routes = tuple(f.images for f in nf.factors)
    return (len(nf.factors), -nf.infimum, routes)


def decompose_commuting(a: BraidWord, b: BraidWord) -> B3Decomposition:
    """Express a commuting 3-strand pair over a single root and central twists.

    The root is normalised deterministically: its half-twist power is
    brought into {0, -1} by central full twists, the root and its inverse
    are compared by (factor count, power, factor tuples) and the smaller
    one kept, and central pairs take the empty root by convention.  The
    returned data is verified by normal-form remultiplication.
    """
    if a.strands != 3 or b.strands != 3:
        raise ValueError("decomposition is defined for 3-strand words")
    pair = CommutingPair(a, b)  # validates commutation
    abar, bbar = _fp_image(a), _fp_image(b)
    if abar == () and bbar == ():
        c = BraidWord.identity(3)
        result = B3Decomposition(
            c, 0, 0, _twist_exponent_for(a, c, 0), _twist_exponent_for(b, c, 0)
        )
        return _verify(pair, result)
    primary = abar if abar != () else bbar
    core, u = _cyclic_reduce(primary)
    root_core, _ = _primitive_root(core)
    root = _fp_mul(_fp_inv(u), _fp_mul(root_core, u))
    l1 = _fp_log(abar, root)
    l2 = _fp_log(bbar, root)
    if l1 is None or l2 is None:
        raise DecompositionError("images are not powers of a common root")
    c = _lift(root)

    candidates = []
    for word, flip in ((c, 1), (inverse(c), -1)):
        nf = normal_form(word)
        shift = -(nf.infimum // 2) if nf.infimum % 2 == 0 else -((nf.infimum + 1) // 2)
        adjusted = NormalForm(3, nf.infimum + 2 * shift, nf.factors)
        candidates.append((_root_sort_key(adjusted), adjusted, flip))
    _, best_nf, flip = min(candidates, key=lambda t: t[0])
    c_final = nf_to_word(best_nf)
    # prefer the short alternating spelling when it names the same element
    alt = _alternating_spelling(root if flip == 1 else _fp_inv(root))
    if alt is not None and len(alt.letters) < len(c_final.letters) and normal_form(alt) == best_nf:
        c_final = alt
    l1f, l2f = l1 * flip, l2 * flip
    result = B3Decomposition(
        c_final,
        l1f,
        l2f,
        _twist_exponent_for(a, c_final, l1f),
        _twist_exponent_for(b, c_final, l2f),
    )
    return _verify(pair, result)


def _verify(pair: CommutingPair, dec: B3Decomposition) -> B3Decomposition:
    for word, l, m in ((pair.a, dec.l1, dec.m1), (pair.b, dec.l2, dec.m2)):
        rebuilt = (dec.c ** l) * full_twist_power(3, m)
        if normal_form(rebuilt) != normal_form(word):
            raise DecompositionError("decomposition failed verification")
    return dec


# ---------------------------------------------------------------------------
# Tri-coloring count and classification
# ---------------------------------------------------------------------------


def phi3(pair: CommutingPair) -> int:
    """The tri-coloring count of the degree-3 link; equals its cocycle
    invariant and is always 27, 9 or 3."""
    if pair.strands != 3:
        raise ValueError("phi3 is defined for degree 3")
    return count_colorings_link(pair, 3)


_CLASS_TAGS = {27: "full27", 9: "nine", 3: "three"}


@dataclass(frozen=True)
class QdlClass:
    """Classification result: the count class and, when the bounded search
    reaches one, a canonical representative pair."""

    tag: str
    representative: tuple[BraidWord, BraidWord] | None


def _canonical_roots() -> list[BraidWord]:
    s1, s2 = sigma(3, 1), sigma(3, 2)
    return [
        BraidWord.identity(3),
        s1,
        s1 * s2,
        s1 * inverse(s2),
        (s1 * inverse(s2)) ** 2,
    ]


def _target_table() -> dict[tuple[NormalForm, NormalForm], tuple[BraidWord, BraidWord]]:
    table = {}
    for root in _canonical_roots():
        for c in (root, inverse(root)):
            for twist in (0, 1):
                pair = (c, full_twist_power(3, twist))
                key = (normal_form(c), normal_form(pair[1]))
                table.setdefault(key, pair)
    return table


def _conjugators() -> list[BraidWord]:
    gens = [sigma(3, 1), inverse(sigma(3, 1)), sigma(3, 2), inverse(sigma(3, 2))]
    out = list(gens)
    for g in gens:
        for h in gens:
            out.append(free_reduce(g * h))
    return [w for w in out if w.letters]


def _successors(a: BraidWord, b: BraidWord):
    yield inverse(a), inverse(b)  # E1
    yield inverse(b), a           # E3
    for s in (1, -1):
        yield a, free_reduce((a ** (2 * s)) * b)  # E4
        yield a, free_reduce((a ** s) * b)        # Q1
    m = full_twist_exponent(b)
    if m is not None:
        for s in (1, -1):
            yield free_reduce(a * full_twist_power(3, 2 * s)), b  # Q2
            yield a, full_twist_power(3, m + 2 * s)               # Q3
        reduced = bracket_reduce(a, 3)
        if reduced.letters != a.letters:
            yield reduced, b  # Q4
    for c in _conjugators():
        ci = inverse(c)
        yield free_reduce(ci * a * c), free_reduce(ci * b * c)  # E2


def classify(pair: CommutingPair, depth: int = 12, max_states: int = 4000) -> QdlClass:
    """Count class of a commuting pair, plus a best-effort representative.

    The tag comes from the tri-coloring count alone (exact and total).
    The representative search runs a breadth-first rewrite over the move
    alphabet with the given depth budget and a state cap; the tag is valid
    whether or not the search reaches a canonical pair.
    """
    count = phi3(pair)
    tag = _CLASS_TAGS.get(count)
    if tag is None:
        raise AssertionError(f"tri-coloring count {count} outside {{27, 9, 3}}")
    targets = _target_table()
    start = (free_reduce(pair.a), free_reduce(pair.b))
    seen = {(normal_form(start[0]), normal_form(start[1]))}
    queue = deque([(start[0], start[1], 0)])
    representative = None
    while queue:
        a, b, d = queue.popleft()
        key = (normal_form(a), normal_form(b))
        if key in targets:
            representative = targets[key]
            break
        if d >= depth or len(seen) >= max_states:
            continue
        for na, nb in _successors(a, b):
            if len(na.letters) + len(nb.letters) > 80:
                continue
            nkey = (normal_form(na), normal_form(nb))
            if nkey in seen:
                continue
            seen.add(nkey)
            queue.append((na, nb, d + 1))
    return QdlClass(tag, representative)


# ---------------------------------------------------------------------------
# Covering-degree bounds from the polynomial invariant
# ---------------------------------------------------------------------------


def tc_index_bound(poly: PhiPolynomial) -> int:
    """Lower bound for the covering degree from a tri-coloring polynomial.

    A non-constant polynomial (one that is not an integer in Z[v]/(v^3-1))
    rules out presentations of degree at most three, so the bound is 4;
    a constant polynomial gives no information and the bound is 0.
    """
    if poly.p != 3:
        raise ValueError("the degree bound uses tri-colorings (p = 3)")
    return 4 if not poly.is_constant else 0


def s4_family_phi3(k: int, m: int) -> PhiPolynomial:
    """Tri-coloring polynomial 3 + 6 v^(2km) of the degree-4 family
    S(s1^2 s2^(3k) s3^2, full_twist^m)."""
    e = (2 * k * m) % 3
    coeffs = [3, 0, 0]
    coeffs[e] += 6
    return PhiPolynomial(3, tuple(coeffs))


def qdl_class_to_json(result: QdlClass) -> dict:
    """Serialisable form: tag plus representative words in the grammar."""
    rep = None
    if result.representative is not None:
        rep = {
            "a": format_word(result.representative[0]),
            "b": format_word(result.representative[1]),
        }
    return {"class": result.tag, "representative": rep}
