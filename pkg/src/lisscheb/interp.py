"""Polynomial interpolation: tensor Chebyshev expansions over a spectral set.

An expansion is a coefficient map over the spectral basis T_gamma(x) =
prod_j cos(gamma_j arccos x_j).  Interpolation of node samples reduces to
the coefficient transforms of the transform module; the reproducing kernel
and the fundamental polynomials are materialized as expansions so they can
be inspected, serialized and re-evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Sequence, Union

import numpy as np

from .errors import DomainViolation, IndexOutOfRange, SpecMismatch
from .nodes import MultiIndex, NodeSpec, build_node_set
from .spectral import GammaSet, SpectralIndex, build_gamma
from . import transform

Scalar = Union[float, complex]

_DOMAIN_SLACK = 1e-12


@dataclass(frozen=True)
class ChebExpansion:
    """A polynomial written in the spectral basis of a spec."""

    gamma_set: GammaSet
    coeffs: Dict[SpectralIndex, Scalar]


def _check_point(x: Sequence[float], dim: int) -> Sequence[float]:
    if len(x) != dim:
        raise DomainViolation(f"point has {len(x)} coordinates, expected {dim}")
    for xj in x:
        if abs(xj) > 1.0 + _DOMAIN_SLACK:
            raise DomainViolation(f"coordinate {xj} outside [-1, 1]")
    return [min(1.0, max(-1.0, float(xj))) for xj in x]


def cheb_T_eval(gamma: SpectralIndex, x: Sequence[float]) -> float:
    """Evaluate the tensor Chebyshev polynomial T_gamma at a point."""
    x = _check_point(x, len(gamma))
    out = 1.0
    for gj, xj in zip(gamma, x):
        out *= math.cos(gj * math.acos(xj))
    return out


def _cheb_tables(
    gamma_set: GammaSet, x: Sequence[float]
) -> list:
    """Per-dimension tables of T_k(x_j) by the three-term recurrence."""
    tables = []
    for j, xj in enumerate(x):
        top = int(gamma_set.elements[:, j].max())
        t = np.empty(top + 1)
        t[0] = 1.0
        if top >= 1:
            t[1] = xj
        for k in range(2, top + 1):
            t[k] = 2.0 * xj * t[k - 1] - t[k - 2]
        tables.append(t)
    return tables


def expansion_eval(p: ChebExpansion, x: Sequence[float]) -> Scalar:
    """Evaluate sum_gamma c_gamma T_gamma(x).

    Uses recurrence tables of one-dimensional Chebyshev values, so the
    cost is linear in the spectral set size; the result matches the
    arccos formula to rounding error.
    """
    gs = p.gamma_set
    x = _check_point(x, gs.spec.dim)
    if not p.coeffs:
        return 0.0
    tables = _cheb_tables(gs, x)
    acc = 0.0
    for gamma, c in p.coeffs.items():
        term = c
        for j, gj in enumerate(gamma):
            term = term * tables[j][gj]
        acc = acc + term
    return acc


def interpolate(h: transform.SampleVector, mode: str = "fast") -> ChebExpansion:
    """The unique polynomial in the spec's space matching h at every node."""
    if mode == "fast":
        return transform.coefficients_fast(h)
    if mode == "naive":
        return transform.coefficients_naive(h)
    raise ValueError(f"unknown mode {mode!r}")


def kernel_eval(
    spec: NodeSpec, x: Sequence[float], y: Sequence[float]
) -> float:
    """The reproducing kernel sum_gamma T_gamma(x) T_gamma(y) / ||T_gamma||^2.

    The continuous norm is 2^(-e(gamma)) for every element of the
    spectral set, the special corner included.
    """
    gs = build_gamma(spec)
    x = _check_point(x, spec.dim)
    y = _check_point(y, spec.dim)
    tx = _cheb_tables(gs, x)
    ty = _cheb_tables(gs, y)
    acc = 0.0
    for pos, gamma in enumerate(gs):
        term = 2.0 ** int(gs.e_counts[pos])
        for j, gj in enumerate(gamma):
            term *= tx[j][gj] * ty[j][gj]
        acc += term
    return acc


def fundamental(spec: NodeSpec, i: MultiIndex) -> ChebExpansion:
    """The polynomial taking value 1 at node i and 0 at every other node.

    Computed as the interpolant of the delta sample at i, which makes its
    coefficients w_i chi_gamma(i) / ||chi_gamma||^2 explicit.
    """
    node_set = build_node_set(spec)
    if tuple(i) not in node_set.lookup:
        raise IndexOutOfRange(f"{i} is not in the index set")
    values = {node.index: 0.0 for node in node_set.nodes}
    values[tuple(i)] = 1.0
    h = transform.SampleVector(spec=spec, values=values)
    return transform.coefficients_naive(h, node_set=node_set)


def expansion_inner_product(p: ChebExpansion, q: ChebExpansion) -> Scalar:
    """The weighted-integral inner product, evaluated through orthogonality.

    Equals sum_gamma p_gamma conj(q_gamma) 2^(-e(gamma)); only the shared
    support contributes.
    """
    if p.gamma_set.spec != q.gamma_set.spec:
        raise SpecMismatch("expansions built from different specs")
    gs = p.gamma_set
    lookup = gs.lookup
    acc = 0.0
    for gamma, c in p.coeffs.items():
        other = q.coeffs.get(gamma)
        if other is None:
            continue
        e = int(gs.e_counts[lookup[gamma]])
        acc = acc + c * np.conj(other) * 2.0 ** (-e)
    if isinstance(acc, complex) or np.iscomplexobj(acc):
        return complex(acc)
    return float(acc)
