"""Closed-form exponent, threshold, and inequality calculators.

Everything here is exact rational arithmetic (fractions.Fraction); the
cleaning threshold additionally reports its two branches as symbolic
(n-exponent, gamma-exponent) pairs so callers can compare exponents rather
than floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .errors import InfeasibleInput, PreconditionViolated, TooFewEdges
from .gluing import RootedPattern
from .graphs import LabeledGraph


@dataclass(frozen=True)
class GoodnessParams:
    """(alpha, A-or-C, eta-or-beta) supersaturation parameters."""

    alpha: Fraction
    big_a: Fraction
    eta: Fraction

    def __post_init__(self):
        if not 0 <= self.alpha < 1:
            raise ValueError("alpha must lie in [0, 1)")
        if self.big_a <= 0 or self.eta <= 0:
            raise ValueError("A and eta must be positive")


@dataclass(frozen=True)
class PatternStats:
    """Vertex/edge counts of a pattern H and its rooted subforest F."""

    h: int
    eH: int
    ell: int
    eF: int

    def __post_init__(self):
        if not 0 < self.ell < self.h:
            raise ValueError("need 0 < v(F) < v(H)")
        if not 0 <= self.eF < self.eH:
            raise ValueError("need 0 <= e(F) < e(H)")

    @staticmethod
    def from_rooted(p: RootedPattern) -> "PatternStats":
        return PatternStats(
            h=p.pattern.vertex_count,
            eH=p.pattern.edge_count,
            ell=p.ell,
            eF=p.root_edge_count,
        )


def feasibility_check(s: Union[PatternStats, LabeledGraph], alpha) -> bool:
    """(v(F) - 1) + (1 - e(F)) (1 - alpha) >= 1, exact."""
    alpha = Fraction(alpha)
    if isinstance(s, LabeledGraph):
        vF, eF = s.vertex_count, s.edge_count
    else:
        vF, eF = s.ell, s.eF
    return (vF - 1) + (1 - eF) * (1 - alpha) >= 1


def es_exponent_forest(alpha, s: PatternStats) -> Fraction:
    """Exponent after gluing copies along a forest:

    max{ 1 - (h-l)/(e(H)-e(F)), 1 - (1-alpha)/(l-1 + (1-e(F))(1-alpha)) }.
    """
    alpha = Fraction(alpha)
    if not feasibility_check(s, alpha):
        raise InfeasibleInput(
            "(v(F)-1) + (1-e(F))(1-alpha) < 1: the deletion lower bound rules this out"
        )
    first = 1 - Fraction(s.h - s.ell, s.eH - s.eF)
    denom = (s.ell - 1) + (1 - s.eF) * (1 - alpha)
    second = 1 - (1 - alpha) / denom
    return max(first, second)


def es_exponent_branches(alpha, s: PatternStats) -> tuple[Fraction, Fraction]:
    """Both branches of the exponent max, for reporting."""
    alpha = Fraction(alpha)
    first = 1 - Fraction(s.h - s.ell, s.eH - s.eF)
    denom = (s.ell - 1) + (1 - s.eF) * (1 - alpha)
    second = 1 - (1 - alpha) / denom
    return first, second


def es_beta(eta, s: PatternStats, big_k, copies: int) -> Fraction:
    """beta = 4^{-e(H)} * (eta / (4 * 8^{e(H)} * (6K)^{e(F)}))^copies."""
    eta = Fraction(eta)
    big_k = Fraction(big_k)
    if big_k <= 0:
        raise PreconditionViolated("K must be positive")
    if copies < 1:
        raise PreconditionViolated("need at least one copy")
    inner = eta / (4 * Fraction(8) ** s.eH * (6 * big_k) ** s.eF)
    return Fraction(1, 4**s.eH) * inner**copies


def tree_gluing_exponent(t: LabeledGraph) -> Fraction:
    """Exponent 1 - 1/r for gluing copies of a tree along its r leaves."""
    if not t.is_tree() or t.vertex_count < 3:
        raise PreconditionViolated("need a tree on at least 3 vertices")
    r = sum(1 for v in range(t.vertex_count) if t.degree(v) == 1)
    return 1 - Fraction(1, r)


def cycle_tree_exponent(cycle_lengths) -> Fraction:
    """Exponent 1/l_C for a tree of even cycles, l_C = min length / 2."""
    lengths = list(cycle_lengths)
    if not lengths:
        raise PreconditionViolated("need at least one cycle")
    if any(c < 4 or c % 2 for c in lengths):
        raise PreconditionViolated("cycle lengths must be even and >= 4")
    return Fraction(2, min(lengths))


@dataclass(frozen=True)
class ThresholdBranch:
    n_exponent: Fraction
    gamma_exponent: Fraction

    def evaluate(self, n: int, gamma: Fraction) -> float:
        # log-space evaluation; exponentiate once at the end
        log = self.n_exponent * math.log(n) + self.gamma_exponent * math.log(gamma)
        return math.exp(log)


@dataclass(frozen=True)
class CleaningThreshold:
    """g(n, H, F, gamma) = C * max(branch1, branch2), with symbolic branches."""

    c: Fraction
    branch1: ThresholdBranch
    branch2: ThresholdBranch
    value: float
    dominating_branch: int  # 1 or 2


def cleaning_threshold(n: int, s: PatternStats, gamma, alpha, c=1) -> CleaningThreshold:
    """Density threshold of the greedy family builder:

    C * max( n^{-(h-l)/(e(H)-e(F))} gamma^{-1/(e(H)-e(F))},
             (n gamma)^{(alpha-1)/((l-1)+(1-alpha)(1-e(F)))} ).
    """
    gamma = Fraction(gamma)
    alpha = Fraction(alpha)
    c = Fraction(c)
    if n < 1:
        raise PreconditionViolated("n must be at least 1")
    if not 0 < gamma <= 1:
        raise PreconditionViolated("gamma must lie in (0, 1]")
    if not feasibility_check(s, alpha):
        raise InfeasibleInput("feasibility inequality fails for these (F, alpha)")
    b1 = ThresholdBranch(
        n_exponent=-Fraction(s.h - s.ell, s.eH - s.eF),
        gamma_exponent=-Fraction(1, s.eH - s.eF),
    )
    expo = (alpha - 1) / ((s.ell - 1) + (1 - alpha) * (1 - s.eF))
    b2 = ThresholdBranch(n_exponent=expo, gamma_exponent=expo)
    v1, v2 = b1.evaluate(n, gamma), b2.evaluate(n, gamma)
    dominating = 1 if v1 >= v2 else 2
    return CleaningThreshold(
        c=c,
        branch1=b1,
        branch2=b2,
        value=float(c) * max(v1, v2),
        dominating_branch=dominating,
    )


def cleaning_constant(s: PatternStats, alpha, big_a, eta_prime) -> float:
    """The full analytic constant in the threshold; astronomically
    conservative at reachable n, reported but never used to gate builds."""
    alpha = Fraction(alpha)
    big_a = Fraction(big_a)
    eta_prime = Fraction(eta_prime)
    first = float(16 * big_a) ** (s.ell - 1) * float(8 * eta_prime * s.h) ** float(1 - alpha)
    first **= 1.0 / float((s.ell - 1) + (1 - s.eF) * (1 - alpha))
    second = 2.0 ** (1.0 / (s.eH - s.eF))
    return max(first, second)


def deletion_exponent(f: LabeledGraph) -> Fraction:
    """Lower-bound exponent 2 - (v(F)-2)/(e(F)-1) of the random-deletion
    construction."""
    if f.edge_count < 2:
        raise TooFewEdges("deletion exponent needs at least 2 edges")
    return 2 - Fraction(f.vertex_count - 2, f.edge_count - 1)


def binom_ratio_bounds(n: int, q, s: int) -> tuple[Fraction, Fraction, Fraction]:
    """(lower, exact, upper) for C(n-s, qn-s) / C(n, qn):

    q (q/2)^{s-1} <= ratio <= q^s, requiring qn integral and qn >= 2(s-1).
    """
    q = Fraction(q)
    if q > 1:
        raise PreconditionViolated("q must satisfy q <= 1")
    qn = q * n
    if qn.denominator != 1:
        raise PreconditionViolated("q*n must be an integer")
    qn = int(qn)
    if qn < 2 * (s - 1):
        raise PreconditionViolated("need q*n >= 2(s-1)")
    if s < 0 or qn < s or n < s:
        raise PreconditionViolated("need 0 <= s <= q*n")
    exact = Fraction(comb(n - s, qn - s), comb(n, qn))
    lower = q * (q / 2) ** (s - 1)
    upper = q**s
    return lower, exact, upper
