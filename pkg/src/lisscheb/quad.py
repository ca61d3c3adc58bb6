"""Quadrature: the weighted node sum and its exactness bookkeeping.

The rule integrates against the product Chebyshev measure
w(x) dx / pi^d with w(x) = prod_j (1 - x_j^2)^(-1/2).  It is exact for
every basis polynomial whose frequency avoids the alias lattice; on the
lattice the rule returns the signed alias value instead of the integral.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .nodes import NodeSet, NodeSpec, build_node_set
from .spectral import SpectralIndex
from .transform import SampleVector, alias_integral, chi_eval, discrete_integral


@dataclass(frozen=True)
class ExactnessEntry:
    rule_value: float
    true_value: float
    ok: bool


def integrate(
    h: SampleVector, node_set: Optional[NodeSet] = None
) -> float:
    """Apply the quadrature rule sum_i w_i h(i) to node samples."""
    return discrete_integral(h, node_set=node_set)


def exactness_table(
    spec: NodeSpec,
    box: Sequence[int],
    tol: float = 1e-12,
) -> Dict[SpectralIndex, ExactnessEntry]:
    """Check the rule against every basis polynomial in a frequency box.

    For each gamma with 0 <= gamma_j <= box_j the rule value
    sum_i w_i T_gamma(z_i) is compared to the analytic integral (1 at
    gamma = 0, else 0) when gamma is off the alias lattice, and to the
    predicted signed alias value otherwise.
    """
    node_set = build_node_set(spec)
    index_rows = [tuple(int(v) for v in row) for row in node_set.indices]
    weights = node_set.weights

    table: Dict[SpectralIndex, ExactnessEntry] = {}
    for gamma in itertools.product(*(range(b + 1) for b in box)):
        rule = 0.0
        for w, idx in zip(weights, index_rows):
            rule += w * chi_eval(spec, gamma, idx)
        predicted = alias_integral(spec, gamma)
        true = 1.0 if all(g == 0 for g in gamma) else 0.0
        if predicted == 0:
            ok = abs(rule - true) < tol
        else:
            ok = abs(rule - predicted) < tol
        table[gamma] = ExactnessEntry(
            rule_value=rule, true_value=true, ok=ok
        )
    return table
