"""Spectral index sets: the frequency tuples spanning the interpolation space.

For a standard spec the set contains all gamma with gamma_i < n_i and
gamma_i/n_i + gamma_j/n_j < 1 for every pair, plus the single special
element (0, ..., 0, n_d).  For a shifted spec the box grows to gamma_i < 2n_i
with the pairwise bound gamma_i/n_i + gamma_j/n_j <= 2, strict whenever
kappa_i and kappa_j differ in parity, plus (0, ..., 0, 2n_d).  All ratio
comparisons are done in cross-multiplied integer form; the distinction
between <= and < at the boundary is essential and floating point would
blur it.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

import numpy as np

from .errors import NotInGammaSet
from .nodes import NodeSpec

SpectralIndex = Tuple[int, ...]


class GammaSet:
    """The ordered spectral basis of a spec.

    ``elements`` is an (N, d) integer array in graded lexicographic order;
    ``norm_sq`` the parallel vector of squared discrete norms; ``special``
    the unique corner element (0, ..., 0, m_d).  ``e_counts`` and
    ``f_counts`` hold the support counts entering the norm formula, which
    the transform reuses as scale factors.
    """

    def __init__(
        self,
        spec: NodeSpec,
        elements: np.ndarray,
        norm_sq: np.ndarray,
        e_counts: np.ndarray,
        f_counts: np.ndarray,
        special_pos: int,
    ):
        self.spec = spec
        self.elements = elements
        self.norm_sq = norm_sq
        self.e_counts = e_counts
        self.f_counts = f_counts
        self.special_pos = special_pos
        self._lookup: Optional[Dict[SpectralIndex, int]] = None

    def __len__(self) -> int:
        return self.elements.shape[0]

    def __iter__(self):
        for row in self.elements:
            yield tuple(int(v) for v in row)

    @property
    def special(self) -> SpectralIndex:
        return tuple(int(v) for v in self.elements[self.special_pos])

    @property
    def lookup(self) -> Dict[SpectralIndex, int]:
        if self._lookup is None:
            self._lookup = {
                tuple(int(v) for v in row): pos
                for pos, row in enumerate(self.elements)
            }
        return self._lookup


def _graded_lex_order(elements: np.ndarray) -> np.ndarray:
    degrees = elements.sum(axis=1)
    keys = tuple(elements[:, j] for j in range(elements.shape[1] - 1, -1, -1))
    return np.lexsort(keys + (degrees,))


def build_gamma(spec: NodeSpec) -> GammaSet:
    """Enumerate the spectral set of a spec in graded lexicographic order."""
    n = spec.n.entries
    d = spec.dim
    m = spec.m

    axes = [np.arange(m[j], dtype=np.int64) for j in range(d)]
    mesh = np.meshgrid(*axes, indexing="ij")
    cand = np.stack([g.ravel() for g in mesh], axis=-1)

    keep = np.ones(cand.shape[0], dtype=bool)
    for i in range(d):
        for j in range(i + 1, d):
            lhs = cand[:, i] * n[j] + cand[:, j] * n[i]
            if not spec.is_shifted:
                keep &= lhs < n[i] * n[j]
            elif (spec.kappa[i] - spec.kappa[j]) % 2 == 1:
                keep &= lhs < 2 * n[i] * n[j]
            else:
                keep &= lhs <= 2 * n[i] * n[j]
    cand = cand[keep]

    special = np.zeros((1, d), dtype=np.int64)
    special[0, d - 1] = m[d - 1]
    elements = np.concatenate([cand, special], axis=0)
    elements = elements[_graded_lex_order(elements)]

    e_counts = (elements > 0).sum(axis=1).astype(np.int64)
    if spec.is_shifted:
        at_n = (elements == np.array(n, dtype=np.int64)).sum(axis=1)
        f_counts = np.maximum(at_n - 1, 0).astype(np.int64)
    else:
        f_counts = np.zeros(elements.shape[0], dtype=np.int64)

    norm = np.exp2((f_counts - e_counts).astype(np.float64))
    special_row = np.zeros(d, dtype=np.int64)
    special_row[d - 1] = m[d - 1]
    special_pos = int(
        np.nonzero((elements == special_row).all(axis=1))[0][0]
    )
    norm[special_pos] = 1.0

    return GammaSet(spec, elements, norm, e_counts, f_counts, special_pos)


def contains(spec: NodeSpec, gamma: SpectralIndex) -> bool:
    """Membership test for the spectral set, without building it."""
    d = spec.dim
    n = spec.n.entries
    m = spec.m
    if len(gamma) != d or any(g < 0 for g in gamma):
        return False
    special = tuple(0 for _ in range(d - 1)) + (m[d - 1],)
    if tuple(gamma) == special:
        return True
    for i in range(d):
        if gamma[i] >= m[i]:
            return False
    for i in range(d):
        for j in range(i + 1, d):
            lhs = gamma[i] * n[j] + gamma[j] * n[i]
            if not spec.is_shifted:
                if lhs >= n[i] * n[j]:
                    return False
            elif (spec.kappa[i] - spec.kappa[j]) % 2 == 1:
                if lhs >= 2 * n[i] * n[j]:
                    return False
            else:
                if lhs > 2 * n[i] * n[j]:
                    return False
    return True


def involution(m: Tuple[int, ...], gamma: SpectralIndex) -> SpectralIndex:
    """Reflect gamma at the boundary in its dominant dimension.

    The dominant dimension k is the largest index attaining the maximum of
    gamma_i/m_i; the image replaces gamma_k by m_k - gamma_k.  On the
    odd-parity part of the spectral set this map is an involution pairing
    it with the complement of the even part.
    """
    k = 0
    for i in range(1, len(gamma)):
        # gamma_i/m_i >= gamma_k/m_k, compared in integers.
        if gamma[i] * m[k] >= gamma[k] * m[i]:
            k = i
    out = list(gamma)
    out[k] = m[k] - gamma[k]
    return tuple(out)


def norm_sq(spec: NodeSpec, gamma: SpectralIndex) -> float:
    """Squared discrete norm of the basis function indexed by gamma."""
    if not contains(spec, gamma):
        raise NotInGammaSet(f"{gamma} not in the spectral set")
    d = spec.dim
    special = tuple(0 for _ in range(d - 1)) + (spec.m[d - 1],)
    if tuple(gamma) == special:
        return 1.0
    e = sum(1 for g in gamma if g > 0)
    f = 0
    if spec.is_shifted:
        at_n = sum(1 for g, ni in zip(gamma, spec.n.entries) if g == ni)
        f = max(at_n - 1, 0)
    return 2.0 ** (f - e)
