"""Closed-form counts of ordered-forest families.

``catalan_gen`` counts ordered forests of uniform-arity trees and
``catalan_vector`` counts forests with prescribed outdegree classes.  Both
are evaluated in a form that has no pole where the textbook quotient is
indeterminate, so every parameter cell of the verification grids is total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Rat, RatLike, binom, check_nat, multinomial


def check_outdegrees(p: Sequence[int]) -> tuple[int, ...]:
    """Validate a strictly increasing tuple of outdegrees, each >= 1."""
    p = tuple(p)
    if not p:
        raise ValueError("at least one outdegree class is required")
    for pj in p:
        if not isinstance(pj, int) or isinstance(pj, bool) or pj < 1:
            raise ValueError(f"outdegrees must be integers >= 1, got {pj!r}")
    if any(a >= b for a, b in zip(p, p[1:])):
        raise ValueError(f"outdegrees must be strictly increasing, got {p}")
    return p


@dataclass(frozen=True)
class VecProfile:
    """Outdegree classes: n[j] internal vertices of outdegree p[j].

    p must be strictly increasing so an internal vertex's outdegree
    identifies its class unambiguously.
    """

    n: tuple[int, ...]
    p: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", tuple(self.n))
        object.__setattr__(self, "p", check_outdegrees(self.p))
        if len(self.n) != len(self.p):
            raise ValueError("n and p must have equal length")
        for nj in self.n:
            check_nat(nj, "n[j]")

    @property
    def t(self) -> int:
        return len(self.p)

    def dot_np(self) -> int:
        """n . p, the total number of child slots of internal vertices."""
        return sum(nj * pj for nj, pj in zip(self.n, self.p))

    def leaf_count(self, gamma: int) -> int:
        """n . (p - 1) + gamma, the leaf count of any matching forest."""
        return sum(nj * (pj - 1) for nj, pj in zip(self.n, self.p)) + gamma


def catalan_gen(n: int, beta: RatLike, gamma: RatLike) -> Rat:
    """Count of ordered forests of beta-ary trees with gamma components and
    n internal vertices, as a rational function of beta and gamma.

    For n >= 1 this is (gamma/n) * binom(beta*n + gamma - 1, n - 1), which
    agrees with the quotient gamma/(beta*n+gamma) * binom(beta*n+gamma, n)
    wherever the latter is defined and stays finite at beta*n + gamma = 0.
    catalan_gen(0, beta, gamma) = 1 for all parameters.
    """
    check_nat(n)
    beta = Fraction(beta)
    gamma = Fraction(gamma)
    if n == 0:
        return Fraction(1)
    return gamma / n * binom(beta * n + gamma - 1, n - 1)


def catalan_vector(profile: VecProfile, gamma: int) -> Rat:
    """Count of ordered forests with gamma components and profile.n[j]
    internal vertices of outdegree profile.p[j] for each class j.

    The empty profile (all n[j] = 0) counts 1 for every gamma including 0;
    gamma = 0 with a non-empty profile counts 0.
    """
    check_nat(gamma, "gamma")
    if all(nj == 0 for nj in profile.n):
        return Fraction(1)
    if gamma == 0:
        return Fraction(0)
    total = profile.dot_np() + gamma
    return Fraction(gamma, total) * multinomial(total, profile.n)


def catalan_sequence(beta: RatLike, gamma: RatLike, n_max: int) -> list[Rat]:
    """[catalan_gen(0), ..., catalan_gen(n_max)] at fixed beta, gamma."""
    check_nat(n_max, "n_max")
    return [catalan_gen(k, beta, gamma) for k in range(n_max + 1)]
