"""Core evaluation engine.

Every measure in this package is h applied to a quasi-linear mean of
elementary exponents:

    X(U, P) = sum_k u_k * tau * log2(p_k)                    lambda = 0
    X(U, P) = (1/lambda) * log2( sum_k u_k * p_k^(tau*lambda) )   else

with tau < 0, weights U on the simplex, and the convention that a zero
weight annihilates its term no matter what p_k is. The lambda != 0 sum
runs in the log2 domain with a max shift, so exponents tau*lambda*log2(p)
of hundreds are exact to working precision instead of overflowing.

inaccuracy() and certainty() wrap the same engine with the generator
families whose composition laws are polynomial: (2^(c*x)-1)/e for
information (e = 0 meaning the linear x itself) and 2^(-c*x)/e for
certainty. entropy() is the self-weighted special case with pluggable
weight rules.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backends
from .composition import CompositionOp, GeneratorH, apply_h, compose
from .core import (
    Distribution,
    WeightVector,
    as_distribution,
    as_weight_vector,
    direct_product,
    resolve_weight_rule,
    weight_product,
)
from .errors import ConstraintViolation, DegenerateWeights, DomainError, LengthMismatch


@dataclass(frozen=True)
class BranchSelector:
    """Threshold below which |lambda| is treated as exactly zero."""

    lambda_switch: float = 1e-8

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lambda_switch) and self.lambda_switch > 0.0):
            raise ConstraintViolation(f"lambda_switch must be positive, got {self.lambda_switch!r}")

    def is_zero(self, lam: float) -> bool:
        return abs(lam) <= self.lambda_switch


DEFAULT_SELECTOR = BranchSelector()


@dataclass(frozen=True)
class MeasureParams:
    """Exponent tau < 0, mean order lambda, and the outer generator."""

    tau: float
    lam: float
    generator: GeneratorH

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau < 0.0):
            raise ConstraintViolation(f"tau must be finite and < 0, got {self.tau!r}")
        if not math.isfinite(self.lam):
            raise ConstraintViolation(f"lambda must be finite, got {self.lam!r}")


@dataclass(frozen=True)
class PolyParams:
    """(tau, lambda, c, e) bundle for the polynomially-composable families."""

    tau: float
    lam: float
    c: float = 1.0
    e: float = 0.0


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a numerical identity check."""

    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool

    @classmethod
    def from_comparison(cls, lhs: float, rhs: float, tolerance: float) -> "VerificationReport":
        abs_err = abs(lhs - rhs)
        if rhs != 0.0:
            rel_err = abs_err / abs(rhs)
        else:
            rel_err = 0.0 if abs_err == 0.0 else math.inf
        passed = rel_err <= tolerance or (abs(rhs) < 1.0 and abs_err <= tolerance)
        return cls(lhs, rhs, abs_err, rel_err, tolerance, passed)


def information_generator(c: float, e: float) -> GeneratorH:
    """Generator used by inaccuracy(); e = 0 selects the linear one."""
    return GeneratorH.linear(1.0) if e == 0.0 else GeneratorH.exp_info(c, e)


def certainty_generator(c: float, e: float) -> GeneratorH:
    return GeneratorH.exp_cert(c, e)


def _active_terms(weights, dist) -> tuple[np.ndarray, np.ndarray]:
    u = as_weight_vector(weights).values
    p = as_distribution(dist).values
    if u.size != p.size:
        raise LengthMismatch(f"weights length {u.size} != distribution length {p.size}")
    active = u > 0.0
    if not np.any(active):
        raise DegenerateWeights("all weights are zero")
    ua = u[active]
    pa = p[active]
    if np.any(pa <= 0.0):
        raise DomainError("zero probability carries nonzero weight")
    return ua, pa


def quasi_mean_exponent(
    weights,
    dist,
    tau: float,
    lam: float,
    selector: BranchSelector = DEFAULT_SELECTOR,
) -> float:
    """The inner mean X(U, P) before the generator is applied."""
    ua, pa = _active_terms(weights, dist)
    kern = backends.active_kernels()
    log2p = np.log2(pa)
    if selector.is_zero(lam):
        return tau * kern.weighted_sum(ua, log2p)
    return kern.weighted_log2_sumexp(np.log2(ua), log2p, tau * lam) / lam


def inforcer_content(p: float, params: MeasureParams) -> float:
    """Elementary content h(tau * log2 p) of a single probability."""
    p = float(p)
    if not (0.0 < p <= 1.0):
        raise DomainError(f"elementary content needs 0 < p <= 1, got {p!r}")
    return apply_h(params.generator, params.tau * math.log2(p))


def inforcer_measure(
    weights,
    dist,
    params: MeasureParams,
    selector: BranchSelector = DEFAULT_SELECTOR,
) -> float:
    """h applied to the quasi-linear mean of elementary exponents."""
    x = quasi_mean_exponent(weights, dist, params.tau, params.lam, selector)
    return apply_h(params.generator, x)


def _check_tau(tau: float) -> None:
    if not (math.isfinite(tau) and tau < 0.0):
        raise ConstraintViolation(f"tau must be finite and < 0, got {tau!r}")


def inaccuracy(
    weights,
    dist,
    tau: float,
    lam: float,
    c: float = 1.0,
    e: float = 0.0,
    selector: BranchSelector = DEFAULT_SELECTOR,
) -> float:
    """Information-family value; e = 0 gives the quasi-linear log form,
    e != 0 the pseudo-additive exponential form (requires c*e > 0)."""
    _check_tau(tau)
    gen = information_generator(c, e)
    x = quasi_mean_exponent(weights, dist, tau, lam, selector)
    return apply_h(gen, x)


def certainty(
    weights,
    dist,
    tau: float,
    lam: float,
    c: float = 1.0,
    e: float = 1.0,
    selector: BranchSelector = DEFAULT_SELECTOR,
) -> float:
    """Certainty-family value 2^(-c*X)/e; strictly positive."""
    _check_tau(tau)
    gen = certainty_generator(c, e)
    x = quasi_mean_exponent(weights, dist, tau, lam, selector)
    return apply_h(gen, x)


def entropy(
    dist,
    weight_rule="self",
    *,
    family: str = "information",
    tau: float = -1.0,
    lam: float = 0.0,
    c: float = 1.0,
    e: float = 0.0,
    selector: BranchSelector = DEFAULT_SELECTOR,
) -> float:
    """Measure of a single distribution under a named weight rule.

    weight_rule follows core.resolve_weight_rule: "self", ("escort", beta),
    ("utility", beta, V), ("external", U), or ("tilted", U).
    """
    d = as_distribution(dist)
    w = resolve_weight_rule(d, weight_rule)
    if family == "certainty":
        return certainty(w, d, tau, lam, c, e, selector)
    if family in ("information", "inaccuracy"):
        return inaccuracy(w, d, tau, lam, c, e, selector)
    raise ConstraintViolation(f"unknown family {family!r}")


def verify_composability(
    kind: str,
    params: PolyParams,
    first_weights,
    first_dist,
    second_weights,
    second_dist,
    tolerance: float = 1e-9,
    selector: BranchSelector = DEFAULT_SELECTOR,
) -> VerificationReport:
    """Check M(U*V; P*Q) against M(U;P) composed with M(V;Q).

    kind "information"/"inaccuracy" composes with x + y + e*x*y (plain
    addition at e = 0); kind "certainty" with the e-scaled product.
    """
    if kind in ("information", "inaccuracy"):
        evaluate = inaccuracy
        op = CompositionOp.additive() if params.e == 0.0 else CompositionOp.pseudo_additive(params.e)
    elif kind == "certainty":
        evaluate = certainty
        op = CompositionOp.multiplicative(params.e)
    else:
        raise ConstraintViolation(f"unknown family {kind!r}")
    u = as_weight_vector(first_weights)
    v = as_weight_vector(second_weights)
    p = as_distribution(first_dist)
    q = as_distribution(second_dist)
    m1 = evaluate(u, p, params.tau, params.lam, params.c, params.e, selector)
    m2 = evaluate(v, q, params.tau, params.lam, params.c, params.e, selector)
    lhs = evaluate(
        weight_product(u, v),
        direct_product(p, q),
        params.tau,
        params.lam,
        params.c,
        params.e,
        selector,
    )
    rhs = compose(op, m1, m2)
    return VerificationReport.from_comparison(lhs, rhs, tolerance)
