"""Exact integer arithmetic: coprimality validation and simultaneous congruences.

Everything in this module is pure integer arithmetic; no floating point is
involved anywhere.  All index-set combinatorics in the rest of the library
rest on these primitives being bit-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

from .errors import (
    CoprimalityViolation,
    EmptyDimension,
    IncompatibleCongruences,
    OverflowDimension,
    ZeroEntry,
)

# Explicit 64-bit guard: Python ints never wrap, but downstream array code and
# serialized output assume the doubled products stay inside int64.
_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class DimensionVector:
    """A vector of pairwise relatively prime frequencies n_1..n_d.

    Carries the derived products: ``product`` is the product of all entries
    and ``coproducts[i]`` the product with entry i left out.
    """

    entries: Tuple[int, ...]
    product: int = field(compare=False)
    coproducts: Tuple[int, ...] = field(compare=False)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def validate_pairwise_coprime(entries: Iterable[int]) -> DimensionVector:
    """Validate a frequency vector and populate its derived products.

    Raises EmptyDimension, ZeroEntry, CoprimalityViolation or
    OverflowDimension on invalid input.  Indices in CoprimalityViolation
    are 1-based to match the usual n_1..n_d naming.
    """
    entries = tuple(int(e) for e in entries)
    if not entries:
        raise EmptyDimension("frequency vector must be non-empty")
    for e in entries:
        if e == 0:
            raise ZeroEntry("frequency entries must be positive")
        if e < 0:
            raise ZeroEntry(f"frequency entries must be positive, got {e}")
    d = len(entries)
    for i in range(d):
        for j in range(i + 1, d):
            g = math.gcd(entries[i], entries[j])
            if g > 1:
                raise CoprimalityViolation(i + 1, j + 1, g)
    product = 1
    for e in entries:
        product *= e
    # Guard the largest integer any construction needs: 4 * P[2n].
    if 4 * (2**d) * product > _INT64_MAX:
        raise OverflowDimension(
            f"product {product} too large for 64-bit index arithmetic"
        )
    coproducts = tuple(product // e for e in entries)
    return DimensionVector(entries=entries, product=product, coproducts=coproducts)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def crt_solve(congruences: Sequence[Tuple[int, int]]) -> int:
    """Solve a system of simultaneous congruences l = a_i mod k_i.

    The moduli need not be pairwise coprime; the compatibility condition
    a_i = a_j mod gcd(k_i, k_j) is checked for every pair first and
    IncompatibleCongruences raised when it fails.  Solutions are merged
    pairwise with Bezout coefficients, so the result is the unique l in
    [0, lcm(k_1..k_d)).
    """
    if not congruences:
        raise EmptyDimension("congruence system must be non-empty")
    pairs = [(int(a), int(k)) for a, k in congruences]
    for _, k in pairs:
        if k < 1:
            raise ZeroEntry("moduli must be positive")
    d = len(pairs)
    for i in range(d):
        for j in range(i + 1, d):
            g = math.gcd(pairs[i][1], pairs[j][1])
            if (pairs[i][0] - pairs[j][0]) % g != 0:
                raise IncompatibleCongruences(i + 1, j + 1)
    a, k = pairs[0]
    a %= k
    for i in range(1, d):
        b, m = pairs[i]
        g, p, _ = extended_gcd(k, m)
        lcm = k // g * m
        # l = a + k*t with k*t = (b - a) mod m; solvable since g | (b - a).
        t = ((b - a) // g * p) % (m // g)
        a = (a + k * t) % lcm
        k = lcm
    return a
