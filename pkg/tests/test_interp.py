import math

import numpy as np
import pytest

from lisscheb.congruence import validate_pairwise_coprime
from lisscheb.errors import DomainViolation, IndexOutOfRange, SpecMismatch
from lisscheb.interp import (
    ChebExpansion,
    cheb_T_eval,
    expansion_eval,
    expansion_inner_product,
    fundamental,
    interpolate,
    kernel_eval,
)
from lisscheb.nodes import NodeSpec, build_node_set
from lisscheb.spectral import build_gamma
from lisscheb.transform import SampleVector, chi_eval

N53 = validate_pairwise_coprime((5, 3))

ALL_SPECS = [
    NodeSpec(n=validate_pairwise_coprime(nv))
    for nv in [(5, 3), (7, 4), (5, 3, 2)]
] + [
    NodeSpec(n=validate_pairwise_coprime(nv), kappa=kv)
    for nv, kv in [((5, 3), (0, 1)), ((3, 1, 2), (0, 0, 0))]
]


def random_samples(spec, rng):
    ns = build_node_set(spec)
    return SampleVector(
        spec=spec,
        values={
            n.index: float(v)
            for n, v in zip(ns.nodes, rng.standard_normal(len(ns)))
        },
    )


def test_cheb_T_examples():
    assert cheb_T_eval((1,), (0.3,)) == pytest.approx(0.3)
    assert cheb_T_eval((2,), (0.5,)) == pytest.approx(-0.5)
    assert cheb_T_eval((3, 2), (1.0, -1.0)) == pytest.approx(1.0)
    assert cheb_T_eval((0, 0), (0.1, 0.9)) == 1.0


def test_domain_violation():
    with pytest.raises(DomainViolation):
        cheb_T_eval((1,), (1.5,))
    with pytest.raises(DomainViolation):
        cheb_T_eval((1, 1), (0.0,))
    # a point within roundoff slack of the boundary is clamped, not rejected
    assert cheb_T_eval((2,), (1.0 + 1e-14,)) == pytest.approx(1.0)


def test_expansion_eval_simple():
    gs = build_gamma(NodeSpec(n=N53))
    zero = ChebExpansion(gamma_set=gs, coeffs={})
    assert expansion_eval(zero, (0.2, -0.7)) == 0.0

    single = ChebExpansion(gamma_set=gs, coeffs={(2, 1): 3.0})
    x = (0.4, -0.6)
    assert expansion_eval(single, x) == pytest.approx(
        3.0 * cheb_T_eval((2, 1), x), abs=1e-14
    )


def test_recurrence_matches_arccos_formula():
    rng = np.random.default_rng(21)
    spec = NodeSpec(n=N53, kappa=(0, 1))
    gs = build_gamma(spec)
    coeffs = {
        gamma: float(c)
        for gamma, c in zip(gs, rng.standard_normal(len(gs)))
    }
    p = ChebExpansion(gamma_set=gs, coeffs=coeffs)
    for _ in range(50):
        x = tuple(rng.uniform(-1, 1, size=2))
        direct = sum(c * cheb_T_eval(g, x) for g, c in coeffs.items())
        assert expansion_eval(p, x) == pytest.approx(direct, abs=1e-13)


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_interpolation_roundtrip(spec):
    rng = np.random.default_rng(22)
    ns = build_node_set(spec)
    h = random_samples(spec, rng)
    p = interpolate(h)
    for node in ns.nodes:
        assert expansion_eval(p, node.point) == pytest.approx(
            h.values[node.index], abs=1e-11
        )


def test_interpolation_recovers_space_member():
    spec = NodeSpec(n=N53)
    gs = build_gamma(spec)
    ns = build_node_set(spec)
    rng = np.random.default_rng(23)
    coeffs = {
        gamma: float(c)
        for gamma, c in zip(gs, rng.standard_normal(len(gs)))
    }
    h = SampleVector(
        spec=spec,
        values={
            node.index: sum(
                c * chi_eval(spec, g, node.index) for g, c in coeffs.items()
            )
            for node in ns.nodes
        },
    )
    p = interpolate(h)
    for gamma, c in coeffs.items():
        assert p.coeffs[gamma] == pytest.approx(c, abs=1e-12)


def test_interpolate_rejects_unknown_mode():
    rng = np.random.default_rng(24)
    with pytest.raises(ValueError):
        interpolate(random_samples(NodeSpec(n=N53), rng), mode="adaptive")


def test_kernel_symmetry_and_corner_value():
    spec = NodeSpec(n=N53)
    rng = np.random.default_rng(25)
    for _ in range(10):
        x = tuple(rng.uniform(-1, 1, size=2))
        y = tuple(rng.uniform(-1, 1, size=2))
        assert kernel_eval(spec, x, y) == pytest.approx(
            kernel_eval(spec, y, x), abs=1e-11
        )
    # d = 1, n = 2: the kernel at (1, 1) sums 1 + 2 T_1^2 + 2 T_2^2 = 5
    spec1 = NodeSpec(n=validate_pairwise_coprime((2,)))
    assert kernel_eval(spec1, (1.0,), (1.0,)) == pytest.approx(5.0)


def test_kernel_reproduces_space_members():
    # The kernel section at y, written as an expansion with coefficients
    # 2^e T_gamma(y), evaluates consistently and reproduces any member of
    # the space under the continuous inner product.
    spec = NodeSpec(n=N53)
    gs = build_gamma(spec)
    rng = np.random.default_rng(26)
    coeffs = {
        gamma: float(c)
        for gamma, c in zip(gs, rng.standard_normal(len(gs)))
    }
    p = ChebExpansion(gamma_set=gs, coeffs=coeffs)
    for _ in range(5):
        x = tuple(rng.uniform(-1, 1, size=2))
        y = tuple(rng.uniform(-1, 1, size=2))
        section = ChebExpansion(
            gamma_set=gs,
            coeffs={
                gamma: 2.0 ** int(gs.e_counts[pos]) * cheb_T_eval(gamma, y)
                for pos, gamma in enumerate(gs)
            },
        )
        assert expansion_eval(section, x) == pytest.approx(
            kernel_eval(spec, x, y), abs=1e-11
        )
        assert expansion_inner_product(p, section) == pytest.approx(
            expansion_eval(p, y), abs=1e-11
        )


@pytest.mark.parametrize(
    "spec",
    [NodeSpec(n=N53), NodeSpec(n=N53, kappa=(0, 1))],
)
def test_fundamental_delta_property(spec):
    ns = build_node_set(spec)
    for i in [ns.nodes[0].index, ns.nodes[len(ns) // 2].index]:
        L = fundamental(spec, i)
        for node in ns.nodes:
            want = 1.0 if node.index == i else 0.0
            assert expansion_eval(L, node.point) == pytest.approx(
                want, abs=1e-11
            )


def test_fundamental_partition_of_unity():
    spec = NodeSpec(n=N53)
    ns = build_node_set(spec)
    polys = [fundamental(spec, node.index) for node in ns.nodes]
    rng = np.random.default_rng(27)
    for _ in range(10):
        x = tuple(rng.uniform(-1, 1, size=2))
        total = sum(expansion_eval(L, x) for L in polys)
        assert total == pytest.approx(1.0, abs=1e-11)


def test_fundamental_rejects_bad_index():
    with pytest.raises(IndexOutOfRange):
        fundamental(NodeSpec(n=N53), (0, 1))


def test_inner_product_examples():
    gs = build_gamma(NodeSpec(n=N53))
    p = ChebExpansion(gamma_set=gs, coeffs={(0, 0): 2.0, (1, 0): 4.0})
    q = ChebExpansion(gamma_set=gs, coeffs={(1, 0): 1.0, (0, 1): 9.0})
    # only the shared (1, 0) term contributes, with weight 2^(-1)
    assert expansion_inner_product(p, q) == pytest.approx(2.0)
    assert expansion_inner_product(p, p) == pytest.approx(4.0 + 8.0)


def test_inner_product_matches_quadrature():
    spec = NodeSpec(n=N53)
    ns = build_node_set(spec)
    gs = build_gamma(spec)
    rng = np.random.default_rng(28)
    coeffs = {
        gamma: float(c)
        for gamma, c in zip(gs, rng.standard_normal(len(gs)))
    }
    p = ChebExpansion(gamma_set=gs, coeffs=coeffs)
    # independent oracle: tensor Gauss-Chebyshev quadrature, exact for the
    # squared polynomial because its per-axis degree stays below 2K
    K = 32
    t = (2 * np.arange(K) + 1) * math.pi / (2 * K)
    x = np.cos(t)
    total = 0.0
    for xi in x:
        for xj in x:
            v = expansion_eval(p, (float(xi), float(xj)))
            total += v * v
    total /= K * K
    assert expansion_inner_product(p, p) == pytest.approx(total, abs=1e-11)


def test_inner_product_spec_mismatch():
    p = ChebExpansion(
        gamma_set=build_gamma(NodeSpec(n=N53)), coeffs={(0, 0): 1.0}
    )
    q = ChebExpansion(
        gamma_set=build_gamma(NodeSpec(n=N53, kappa=(0, 1))),
        coeffs={(0, 0): 1.0},
    )
    with pytest.raises(SpecMismatch):
        expansion_inner_product(p, q)


def test_d1_matches_barycentric_reference():
    """One-dimensional interpolation agrees with a classical formula.

    The reference is barycentric interpolation on the cosine-spaced grid
    with weights (-1)^i, halved at the endpoints.
    """
    n = 12
    spec = NodeSpec(n=validate_pairwise_coprime((n,)))
    ns = build_node_set(spec)
    f = lambda x: math.exp(x) * math.sin(2 * x)
    h = SampleVector(
        spec=spec,
        values={node.index: f(node.point[0]) for node in ns.nodes},
    )
    p = interpolate(h)

    xs = np.array([node.point[0] for node in ns.nodes])
    fs = np.array([h.values[node.index] for node in ns.nodes])
    w = np.array([(-1.0) ** i for i in range(n + 1)])
    w[0] *= 0.5
    w[-1] *= 0.5

    rng = np.random.default_rng(29)
    for _ in range(20):
        x = float(rng.uniform(-1, 1))
        diff = x - xs
        if np.any(diff == 0):
            continue
        bary = float(np.sum(w * fs / diff) / np.sum(w / diff))
        assert expansion_eval(p, (x,)) == pytest.approx(bary, abs=1e-11)
