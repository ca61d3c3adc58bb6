"""Discrete inner products and coefficient computation on node samples.

The basis functions chi_gamma(i) = prod_j cos(gamma_j i_j pi / m_j) are
orthogonal under the weighted counting measure on the index set.  The
coefficients of a sample vector in that basis are computed twice: a direct
double loop kept permanently as the reference oracle, and a fast path that
embeds the weighted samples into the full grid and runs an
endpoint-inclusive cosine transform along each axis via a real FFT of the
mirror extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Union

import numpy as np

from .errors import SpecMismatch
from .nodes import MultiIndex, NodeSet, NodeSpec, build_node_set
from .spectral import GammaSet, SpectralIndex, build_gamma
from .trig import cos_pi_ratio

Scalar = Union[float, complex]


@dataclass(frozen=True)
class SampleVector:
    """Data values h(i) given on the full index set of a spec."""

    spec: NodeSpec
    values: Dict[MultiIndex, Scalar]


@dataclass(frozen=True)
class GridTensor:
    """The weighted samples embedded into the full box grid.

    The array covers every grid index (0..m_j per axis); positions whose
    index is outside the parity-constrained index set hold zero.
    """

    spec: NodeSpec
    array: np.ndarray


def chi_eval(spec: NodeSpec, gamma: SpectralIndex, i: MultiIndex) -> float:
    """Evaluate prod_j cos(gamma_j i_j pi / m_j) with exact angle reduction."""
    out = 1.0
    for gj, ij, mj in zip(gamma, i, spec.m):
        out *= cos_pi_ratio(gj * ij, mj)
    return out


def aligned_values(
    h: SampleVector, node_set: NodeSet
) -> np.ndarray:
    """Order the sample dict along the node set, validating its domain."""
    if h.spec != node_set.spec:
        raise SpecMismatch("sample vector and node set use different specs")
    n = len(node_set)
    if len(h.values) != n:
        raise KeyError(
            f"sample vector has {len(h.values)} entries, expected {n}"
        )
    is_complex = any(isinstance(v, complex) for v in h.values.values())
    out = np.empty(n, dtype=np.complex128 if is_complex else np.float64)
    lookup = node_set.lookup
    for key, val in h.values.items():
        out[lookup[key]] = val
    return out


def discrete_integral(
    h: SampleVector, node_set: Optional[NodeSet] = None
) -> Scalar:
    """The weighted sum over all nodes, sum_i w_i h(i)."""
    if node_set is None:
        node_set = build_node_set(h.spec)
    vals = aligned_values(h, node_set)
    total = np.dot(node_set.weights, vals)
    return complex(total) if np.iscomplexobj(vals) else float(total)


def alias_integral(spec: NodeSpec, gamma: SpectralIndex) -> int:
    """The discrete integral of chi_gamma, evaluated combinatorially.

    Nonzero only when every gamma_i is the n_i-th (standard) or 2n_i-th
    (shifted) multiple h_i with even sum of the h_i; the value is then 1,
    with an extra sign (-1)^(sum h_i kappa_i) in the shifted case.
    """
    step = 2 if spec.is_shifted else 1
    hs = []
    for g, ni in zip(gamma, spec.n.entries):
        q, r = divmod(g, step * ni)
        if r != 0:
            return 0
        hs.append(q)
    if sum(hs) % 2 != 0:
        return 0
    if spec.is_shifted:
        theta = sum(hi * ki for hi, ki in zip(hs, spec.kappa))
        return -1 if theta % 2 else 1
    return 1


def coefficients_naive(
    h: SampleVector,
    node_set: Optional[NodeSet] = None,
    gamma_set: Optional[GammaSet] = None,
):
    """Basis coefficients by the direct double loop; the reference oracle.

    c_gamma = <h, chi_gamma> / ||chi_gamma||^2 with the discrete inner
    product; every chi value goes through the exact angle reduction.
    """
    from . import interp

    if node_set is None:
        node_set = build_node_set(h.spec)
    if gamma_set is None:
        gamma_set = build_gamma(h.spec)
    vals = aligned_values(h, node_set)
    weights = node_set.weights
    index_rows = [tuple(int(v) for v in row) for row in node_set.indices]

    coeffs: Dict[SpectralIndex, Scalar] = {}
    for pos, gamma in enumerate(gamma_set):
        acc = 0.0
        for k, idx in enumerate(index_rows):
            acc = acc + weights[k] * vals[k] * chi_eval(h.spec, gamma, idx)
        coeffs[gamma] = acc / gamma_set.norm_sq[pos]
    return interp.ChebExpansion(gamma_set=gamma_set, coeffs=coeffs)


def embed_grid(h: SampleVector, node_set: NodeSet) -> GridTensor:
    """Scatter w_i h(i) into the full box grid, zero off the index set."""
    vals = aligned_values(h, node_set)
    shape = tuple(mj + 1 for mj in h.spec.m)
    array = np.zeros(shape, dtype=vals.dtype)
    array[tuple(node_set.indices[:, j] for j in range(h.spec.dim))] = (
        node_set.weights * vals
    )
    return GridTensor(spec=h.spec, array=array)


def _cosine_transform_axis(grid: np.ndarray, axis: int) -> np.ndarray:
    """Endpoint-inclusive cosine sums along one axis.

    Computes S_k = sum_{i=0}^m g_i cos(pi k i / m) for k = 0..m by
    mirror-extending to length 2m and taking the real part of an rfft:
    the extension's DFT equals 2 S_k - g_0 - (-1)^k g_m.
    """
    m = grid.shape[axis] - 1
    g0 = np.take(grid, [0], axis=axis)
    gm = np.take(grid, [m], axis=axis)
    interior = np.take(grid, range(m - 1, 0, -1), axis=axis)
    ext = np.concatenate([grid, interior], axis=axis)
    y = np.fft.rfft(ext, axis=axis)
    signs_shape = [1] * grid.ndim
    signs_shape[axis] = m + 1
    signs = (-1.0) ** np.arange(m + 1)
    signs = signs.reshape(signs_shape)
    return (y.real + g0 + signs * gm) / 2.0


def coefficients_fast(
    h: SampleVector,
    node_set: Optional[NodeSet] = None,
    gamma_set: Optional[GammaSet] = None,
):
    """Basis coefficients via nested fast cosine transforms.

    Embeds the weighted samples into the box grid, transforms each axis in
    turn and reads off c_gamma = 2^(e - f) g_gamma (g_gamma for the
    special element).  Matches coefficients_naive to rounding error.
    """
    from . import interp

    if node_set is None:
        node_set = build_node_set(h.spec)
    if gamma_set is None:
        gamma_set = build_gamma(h.spec)

    tensor = embed_grid(h, node_set)
    array = tensor.array
    if np.iscomplexobj(array):
        real = _transform_all_axes(array.real)
        imag = _transform_all_axes(array.imag)
        g = real + 1j * imag
    else:
        g = _transform_all_axes(array)

    scale = np.exp2(
        (gamma_set.e_counts - gamma_set.f_counts).astype(np.float64)
    )
    scale[gamma_set.special_pos] = 1.0
    raw = g[tuple(gamma_set.elements[:, j] for j in range(h.spec.dim))]
    cvec = scale * raw

    coeffs = {
        gamma: (complex(c) if np.iscomplexobj(cvec) else float(c))
        for gamma, c in zip(gamma_set, cvec)
    }
    return interp.ChebExpansion(gamma_set=gamma_set, coeffs=coeffs)


def _transform_all_axes(array: np.ndarray) -> np.ndarray:
    out = array
    for axis in range(array.ndim):
        out = _cosine_transform_axis(out, axis)
    return out
