"""
Backend selection for the coloring-enumeration kernel.

Summing crossing weights over every coloring of a closure is the one hot
loop in this package (p^dim colorings times word length).  A Cython
extension provides the fast path; this module falls back to a pure-Python
implementation with identical semantics when the extension is missing or
when TORUSLINK_PURE=1 is set.

Both implementations walk a braid word downward while maintaining the arc
colors at each position and the region colors between positions.  At a
crossing of sign e at position k the weight is

    -e * theta(r, y, z)

where r is the color of the region between the two crossing strands just
above the crossing, y the color of the incoming under-strand, z the color
of the over-strand, and theta the flat p^3 cocycle table.  The leading
sign is the convention constant pinned by the closed-form cross-checks in
the test suite.
"""

from __future__ import annotations

import os
from typing import Sequence

try:  # pragma: no cover - exercised only when the extension is built
    from . import _shadowx as _ext
except ImportError:  # pragma: no cover
    _ext = None

if os.environ.get("TORUSLINK_PURE") == "1":
    _ext = None


def backend_name() -> str:
    """Which kernel is active: "cython" or "python"."""
    return "cython" if _ext is not None else "python"


def psi_walk(
    p: int,
    letters: Sequence[tuple[int, int]],
    colors: Sequence[int],
    base: int,
    theta: Sequence[int],
) -> int:
    """Weight sum of one shadow-colored closed-braid diagram, mod p."""
    n = len(colors)
    c = [v % p for v in colors]
    r = [0] * (n + 1)
    r[0] = base % p
    for j in range(n):
        r[j + 1] = (2 * c[j] - r[j]) % p
    acc = 0
    for index, sign in letters:
        k = index - 1
        north = r[k + 1]
        if sign > 0:
            y, z = c[k], c[k + 1]
            c[k] = z
            c[k + 1] = (2 * z - y) % p
        else:
            z, y = c[k], c[k + 1]
            c[k] = (2 * z - y) % p
            c[k + 1] = z
        w = theta[(north * p + y) * p + z]
        acc += p - w if sign > 0 else w
        r[k + 1] = (2 * c[k] - r[k]) % p
    return acc % p


def _weight_histogram_py(
    p: int,
    strands: int,
    letters: Sequence[tuple[int, int]],
    basis: Sequence[Sequence[int]],
    theta: Sequence[int],
    base: int,
) -> list[int]:
    """Histogram of psi_walk values over every F_p combination of the basis."""
    n = strands
    dim = len(basis)
    rows = [[v % p for v in row] for row in basis]
    counts = [0] * p
    colors = [0] * n
    digits = [0] * dim
    lets = [(index - 1, sign) for index, sign in letters]
    scratch = [0] * n
    region = [0] * (n + 1)
    base %= p
    for _ in range(p**dim):
        # inline psi_walk on scratch buffers (this loop dominates runtime)
        for j in range(n):
            scratch[j] = colors[j]
        region[0] = base
        for j in range(n):
            region[j + 1] = (2 * scratch[j] - region[j]) % p
        acc = 0
        for k, sign in lets:
            north = region[k + 1]
            if sign > 0:
                y = scratch[k]
                z = scratch[k + 1]
                scratch[k] = z
                scratch[k + 1] = (2 * z - y) % p
                acc += p - theta[(north * p + y) * p + z]
            else:
                z = scratch[k]
                y = scratch[k + 1]
                scratch[k] = (2 * z - y) % p
                scratch[k + 1] = z
                acc += theta[(north * p + y) * p + z]
            region[k + 1] = (2 * scratch[k] - region[k]) % p
        counts[acc % p] += 1
        # odometer step; resetting a digit from p-1 to 0 adds the row once
        # more mod p, so every touched digit contributes one row addition
        i = 0
        while i < dim:
            digits[i] += 1
            row = rows[i]
            for j in range(n):
                colors[j] = (colors[j] + row[j]) % p
            if digits[i] < p:
                break
            digits[i] = 0
            i += 1
    return counts


def weight_histogram(
    p: int,
    strands: int,
    letters: Sequence[tuple[int, int]],
    basis: Sequence[Sequence[int]],
    theta: Sequence[int],
    base: int = 0,
) -> list[int]:
    """Histogram (length p) of shadow weight sums over a coloring space."""
    if _ext is not None:
        return _ext.weight_histogram(
            p, strands, [tuple(l) for l in letters], [list(r) for r in basis], list(theta), base
        )
    return _weight_histogram_py(p, strands, letters, basis, theta, base)


# exposed for equivalence tests between the two backends
weight_histogram_py = _weight_histogram_py
