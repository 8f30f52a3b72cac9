"""Identity verification harness: exact evaluation on rational grids.

Every check evaluates both sides of an identity with exact rationals over
a parameter grid and reports pass, or fail with a reproducible
counterexample.  Parameter points where a formula's own denominator
vanishes are skipped and listed, never silently passed.  A grid pass over
more points per variable than the polynomial degree certifies the identity
for arbitrary parameters; the report records the grid actually used.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .counting import VecProfile, catalan_gen, catalan_vector, check_outdegrees
from .exact import Rat, RatLike, as_rat, binom, check_nat, multinomial, rat_str
from .forest import compositions
from .involution import signed_sum
from .riordan import (
    catalan_family,
    catalan_gf,
    catalan_gf_functional_check,
    convolution_check,
    modified_riordan_check,
    riordan_theorem_check,
    series_binpow,
    _row_sums,
)

IDENTITY_IDS = (
    "Eq1",
    "Eq2",
    "Eq3",
    "Eq4",
    "Eq7",
    "Eq8",
    "Eq9_roundtrip",
    "Eq10",
    "ClosedForm",
)


class ConfigError(ValueError):
    """Malformed grid configuration."""


@dataclass(frozen=True)
class Counterexample:
    params: tuple[tuple[str, str], ...]
    lhs: str
    rhs: str
    detail: str = ""

    @staticmethod
    def at(params: Mapping[str, object], lhs: object, rhs: object, detail: str = "") -> "Counterexample":
        shown = tuple((k, str(v)) for k, v in params.items())
        return Counterexample(shown, str(lhs), str(rhs), detail)

    def to_json(self) -> dict:
        out = {"params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    grid: str
    status: str  # "pass" | "fail"
    counterexample: Optional[Counterexample] = None
    skipped: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.identity_id not in IDENTITY_IDS:
            raise ValueError(f"unknown identity id {self.identity_id!r}")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "grid": self.grid,
            "status": self.status,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "skipped": list(self.skipped),
        }


def _report(identity_id: str, grid: str,
            counterexample: Optional[Counterexample],
            skipped: Sequence[str] = ()) -> IdentityReport:
    status = "pass" if counterexample is None else "fail"
    return IdentityReport(identity_id, grid, status, counterexample, tuple(skipped))


# ---------------------------------------------------------------------------
# The alternating-sum identity (scalar form)
# ---------------------------------------------------------------------------

CatalanFn = Callable[[int, RatLike, RatLike], Rat]


def eq2_lhs(alpha: RatLike, beta: RatLike, gamma: RatLike, n: int,
            catalan: CatalanFn = catalan_gen) -> Rat:
    """sum_i (-1)**(n-i) * binom((beta-1)i + alpha, n-i) * C(i)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    total = Fraction(0)
    for i in range(n + 1):
        sign = -1 if (n - i) % 2 else 1
        total += sign * binom((beta - 1) * i + alpha, n - i) * catalan(i, beta, gamma)
    return total


def eq2_lhs_reindexed(alpha: RatLike, beta: RatLike, gamma: RatLike, n: int,
                      catalan: CatalanFn = catalan_gen) -> Rat:
    """Same sum with the summation index reversed (i -> n - i)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    total = Fraction(0)
    for i in range(n + 1):
        sign = -1 if i % 2 else 1
        total += sign * binom((beta - 1) * (n - i) + alpha, i) * catalan(n - i, beta, gamma)
    return total


def eq2_rhs(alpha: RatLike, gamma: RatLike, n: int) -> Rat:
    """(-1)**n * binom(alpha - gamma, n)."""
    sign = -1 if n % 2 else 1
    return sign * binom(Fraction(alpha) - Fraction(gamma), n)


def verify_eq2(alpha: RatLike, beta: RatLike, gamma: RatLike, n_max: int,
               catalan: CatalanFn = catalan_gen) -> IdentityReport:
    """Check the alternating sum against its closed form for 0 <= n <= n_max,
    plus the reversed-index evaluation as an internal consistency check."""
    check_nat(n_max, "n_max")
    grid = f"alpha={rat_str(alpha)}, beta={rat_str(beta)}, gamma={rat_str(gamma)}, n<={n_max}"
    for n in range(n_max + 1):
        lhs = eq2_lhs(alpha, beta, gamma, n, catalan)
        rhs = eq2_rhs(alpha, gamma, n)
        params = {"alpha": rat_str(alpha), "beta": rat_str(beta),
                  "gamma": rat_str(gamma), "n": n}
        if lhs != rhs:
            return _report("Eq2", grid, Counterexample.at(params, lhs, rhs, "direct sum"))
        reindexed = eq2_lhs_reindexed(alpha, beta, gamma, n, catalan)
        if reindexed != lhs:
            return _report("Eq2", grid,
                           Counterexample.at(params, reindexed, lhs, "reindexed sum differs"))
    return _report("Eq2", grid, None)


def verify_eq4(alpha: RatLike, beta: RatLike, gamma: RatLike, n_max: int) -> IdentityReport:
    """Summation-order guard: the reversed-index rewriting of the sum must
    produce identical values term for term (the identity itself is Eq2's)."""
    check_nat(n_max, "n_max")
    grid = f"alpha={rat_str(alpha)}, beta={rat_str(beta)}, gamma={rat_str(gamma)}, n<={n_max}"
    for n in range(n_max + 1):
        reindexed = eq2_lhs_reindexed(alpha, beta, gamma, n)
        direct = eq2_lhs(alpha, beta, gamma, n)
        if reindexed != direct:
            params = {"alpha": rat_str(alpha), "beta": rat_str(beta),
                      "gamma": rat_str(gamma), "n": n}
            return _report("Eq4", grid, Counterexample.at(
                params, reindexed, direct, "reversed-index sum differs"))
    return _report("Eq4", grid, None)


# ---------------------------------------------------------------------------
# The vector form
# ---------------------------------------------------------------------------

def eq3_lhs(p: Sequence[int], n_vec: Sequence[int], gamma: int, alpha: RatLike) -> Rat:
    """Alternating sum over 0 <= i <= n of the colored-forest counts."""
    p = check_outdegrees(p)
    n_vec = tuple(n_vec)
    alpha = Fraction(alpha)
    total = Fraction(0)
    for i_vec in itertools.product(*(range(nj + 1) for nj in n_vec)):
        residual = tuple(nj - ij for nj, ij in zip(n_vec, i_vec))
        sign = -1 if sum(i_vec) % 2 else 1
        slots = sum((pj - 1) * rj for pj, rj in zip(p, residual)) + alpha
        total += sign * multinomial(slots, i_vec) * catalan_vector(VecProfile(residual, p), gamma)
    return total


def eq3_rhs(n_vec: Sequence[int], gamma: int, alpha: RatLike) -> Rat:
    n_vec = tuple(n_vec)
    sign = -1 if sum(n_vec) % 2 else 1
    return sign * multinomial(Fraction(alpha) - gamma, n_vec)


def verify_eq3(p: Sequence[int], gamma: int, alpha: RatLike, n_max_total: int) -> IdentityReport:
    """Check the vector identity for every n-vector with sum <= n_max_total."""
    p = check_outdegrees(p)
    check_nat(gamma, "gamma")
    check_nat(n_max_total, "n_max_total")
    grid = f"p={list(p)}, gamma={gamma}, alpha={rat_str(alpha)}, sum(n)<={n_max_total}"
    for total in range(n_max_total + 1):
        for n_vec in compositions(total, len(p)):
            lhs = eq3_lhs(p, n_vec, gamma, alpha)
            rhs = eq3_rhs(n_vec, gamma, alpha)
            if lhs != rhs:
                params = {"p": str(list(p)), "gamma": gamma,
                          "alpha": rat_str(alpha), "n": str(list(n_vec))}
                return _report("Eq3", grid, Counterexample.at(params, lhs, rhs))
    return _report("Eq3", grid, None)


# ---------------------------------------------------------------------------
# Gould inverse relations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GouldPair:
    """Parameters (a, m, z) of the mutually inverse sequence transforms."""

    a: int
    m: Rat
    z: Rat

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or isinstance(self.a, bool):
            raise ValueError(f"a must be an integer, got {self.a!r}")
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "z", Fraction(self.z))


class SingularGouldParameters(ValueError):
    """The backward transform's denominator -a*n - m vanished at some n."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"backward transform undefined: -a*n - m = 0 at n = {n}")


def gould_forward(seq_a: Sequence[RatLike], pair: GouldPair) -> list[Rat]:
    """b_n = sum_k binom(m + a*k, n - k) * z**(n-k) * a_k."""
    seq = [Fraction(v) for v in seq_a]
    out: list[Rat] = []
    for n in range(len(seq)):
        total = Fraction(0)
        for k in range(n + 1):
            total += binom(pair.m + pair.a * k, n - k) * pair.z ** (n - k) * seq[k]
        out.append(total)
    return out


def gould_backward(seq_b: Sequence[RatLike], pair: GouldPair) -> list[Rat]:
    """a_n = sum_k ((-a*k - m)/(-a*n - m)) * binom(-a*n - m, n - k) * z**(n-k) * b_k.

    The k = n term is the diagonal 1; for n >= 1 the remaining terms need
    -a*n - m != 0, else SingularGouldParameters is raised.
    """
    seq = [Fraction(v) for v in seq_b]
    out: list[Rat] = []
    for n in range(len(seq)):
        total = seq[n]
        if n >= 1:
            denom = -pair.a * n - pair.m
            if denom == 0:
                raise SingularGouldParameters(n)
            for k in range(n):
                numer = -pair.a * k - pair.m
                total += (numer / denom) * binom(denom, n - k) * pair.z ** (n - k) * seq[k]
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# The inverse-relation expansion of the counting formula
# ---------------------------------------------------------------------------

def eq10_lhs(alpha: RatLike, beta: RatLike, gamma: RatLike, n: int) -> Rat:
    """The inverse-relation sum; undefined where (1-beta)*n - alpha = 0."""
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    denom = (1 - beta) * n - alpha
    if denom == 0:
        raise ZeroDivisionError("(1-beta)*n - alpha = 0")
    sign = -1 if n % 2 else 1
    total = Fraction(0)
    for k in range(n + 1):
        coeff = ((1 - beta) * k - alpha) / denom
        total += sign * coeff * binom(denom, n - k) * binom(alpha - gamma, k)
    return total


def verify_eq10(alpha: RatLike, beta: RatLike, gamma: RatLike, n_max: int) -> IdentityReport:
    """Check the expansion against catalan_gen for 1 <= n <= n_max, skipping
    (and listing) rows where its denominator vanishes."""
    check_nat(n_max, "n_max")
    grid = f"alpha={rat_str(alpha)}, beta={rat_str(beta)}, gamma={rat_str(gamma)}, 1<=n<={n_max}"
    skipped: list[str] = []
    for n in range(1, n_max + 1):
        if (1 - Fraction(beta)) * n - Fraction(alpha) == 0:
            skipped.append(f"n={n}: (1-beta)*n - alpha = 0")
            continue
        lhs = eq10_lhs(alpha, beta, gamma, n)
        rhs = catalan_gen(n, beta, gamma)
        if lhs != rhs:
            params = {"alpha": rat_str(alpha), "beta": rat_str(beta),
                      "gamma": rat_str(gamma), "n": n}
            return _report("Eq10", grid, Counterexample.at(params, lhs, rhs), skipped)
    return _report("Eq10", grid, None, skipped)


def closed_form_reduction_check(beta: RatLike, gamma: RatLike, n_max: int) -> IdentityReport:
    """Verify every link of the alpha = 0 reduction chain separately:
    (i) splitting the k/n weight into 1 - (n-k)/n, (ii) the two Vandermonde
    evaluations, (iii) recombination to catalan_gen."""
    check_nat(n_max, "n_max")
    beta, gamma = Fraction(beta), Fraction(gamma)
    grid = f"beta={rat_str(beta)}, gamma={rat_str(gamma)}, 1<=n<={n_max}"
    for n in range(1, n_max + 1):
        sign = -1 if n % 2 else 1
        m_top = (1 - beta) * n
        s0 = sum((Fraction(k, n)) * binom(m_top, n - k) * binom(-gamma, k)
                 for k in range(n + 1)) * sign
        a1 = sum(binom(m_top, n - k) * binom(-gamma, k) for k in range(n + 1)) * sign
        a2 = sum(Fraction(n - k, n) * binom(m_top, n - k) * binom(-gamma, k)
                 for k in range(n + 1)) * sign
        params = {"beta": rat_str(beta), "gamma": rat_str(gamma), "n": n}
        if s0 != a1 - a2:
            return _report("ClosedForm", grid,
                           Counterexample.at(params, s0, a1 - a2, "link (i): split"))
        v1 = sign * binom(m_top - gamma, n)
        v2 = sign * (1 - beta) * binom(m_top - 1 - gamma, n - 1)
        if a1 != v1 or a2 != v2:
            return _report("ClosedForm", grid,
                           Counterexample.at(params, f"{a1},{a2}", f"{v1},{v2}",
                                             "link (ii): Vandermonde evaluations"))
        recombined = v1 + sign * (beta - 1) * binom(m_top - 1 - gamma, n - 1)
        closed = catalan_gen(n, beta, gamma)
        if recombined != closed:
            return _report("ClosedForm", grid,
                           Counterexample.at(params, recombined, closed,
                                             "link (iii): recombination"))
    return _report("ClosedForm", grid, None)


# ---------------------------------------------------------------------------
# Grid configuration and the suite
# ---------------------------------------------------------------------------

DEFAULT_CONFIG: dict = {
    "eq1": {"n_max": 8},
    "eq2": {
        "alpha": {"min": "-3", "max": "5", "step": "1"},
        "beta": {"min": "0", "max": "4", "step": "1"},
        "gamma": {"min": "-2", "max": "4", "step": "1"},
        "n_max": 12,
        "cross": {"betas": [2, 3], "gammas": [1, 2], "alpha_offsets": [0, 1, 2], "n_max": 4},
        "family": {
            "alphas": ["0", "1", "2", "3"],
            "betas": ["1", "2", "3"],
            "gammas": ["1", "2"],
            "order": 15,
        },
    },
    "eq3": {
        "p": [2, 3],
        "gamma": {"min": "0", "max": "2", "step": "1"},
        "alpha": {"min": "-1", "max": "4", "step": "1/2"},
        "n_total_max": 3,
    },
    "eq4": {
        "alpha": {"min": "-3", "max": "5", "step": "1"},
        "beta": {"min": "0", "max": "4", "step": "1"},
        "gamma": {"min": "-2", "max": "4", "step": "1"},
        "n_max": 12,
    },
    "eq7": {
        "beta": {"min": "1", "max": "4", "step": "1"},
        "gamma": {"min": "0", "max": "3", "step": "1"},
        "order": 20,
    },
    "eq8": {
        "beta": {"min": "1", "max": "3", "step": "1"},
        "alpha_pairs": [["1", "1"], ["2", "3"], ["1/2", "3/2"], ["1/2", "1/2"]],
        "order": 15,
    },
    "eq9": {
        "length": 10,
        "sequences": 20,
        "seed": 20250808,
        "pairs": [
            ["2", "0", "1"],
            ["1", "1", "1"],
            ["1", "1/2", "-1"],
            ["0", "1", "2"],
            ["2", "-1", "1/3"],
            ["-1", "1/2", "2"],
        ],
    },
    "eq10": {
        "alpha": {"min": "-2", "max": "3", "step": "1"},
        "beta": {"min": "0", "max": "3", "step": "1"},
        "gamma": {"min": "-1", "max": "3", "step": "1"},
        "n_max": 10,
    },
    "closed_form": {
        "beta": {"min": "-1", "max": "3", "step": "1"},
        "gamma": {"min": "-2", "max": "3", "step": "1"},
        "n_max": 10,
    },
}


def expand_interval(spec: Mapping) -> list[Rat]:
    """Inclusive rational interval {"min","max","step"} -> list of values."""
    try:
        lo = as_rat(spec["min"])
        hi = as_rat(spec["max"])
        step = as_rat(spec["step"])
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad interval {spec!r}: {exc}") from None
    if step <= 0:
        raise ConfigError(f"interval step must be positive, got {rat_str(step)}")
    if lo > hi:
        raise ConfigError(f"interval min {rat_str(lo)} exceeds max {rat_str(hi)}")
    values = []
    v = lo
    while v <= hi:
        values.append(v)
        v += step
    return values


def _interval_text(spec: Mapping) -> str:
    return f"[{spec['min']}..{spec['max']} step {spec['step']}]"


def _grid_nat(cfg: Mapping, key: str) -> int:
    value = cfg.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ConfigError(f"{key} must be a non-negative integer, got {value!r}")
    return value


def _suite_eq2(cfg: Mapping, catalan: CatalanFn) -> IdentityReport:
    """Direct grid sweep plus the enumerative and matrix routes: the signed
    census and the array row sums must both reproduce the direct sum, and
    the plain and derivative-form summation checks must both accept the
    family instance."""
    alphas = expand_interval(cfg["alpha"])
    betas = expand_interval(cfg["beta"])
    gammas = expand_interval(cfg["gamma"])
    n_max = _grid_nat(cfg, "n_max")
    grid = (
        f"alpha in {_interval_text(cfg['alpha'])}, beta in {_interval_text(cfg['beta'])}, "
        f"gamma in {_interval_text(cfg['gamma'])}, n<={n_max}; "
        f"plus involution-census and array-row routes"
    )
    for alpha in alphas:
        for beta in betas:
            for gamma in gammas:
                rep = verify_eq2(alpha, beta, gamma, n_max, catalan)
                if not rep.ok:
                    return _report("Eq2", grid, rep.counterexample)

    cross = cfg.get("cross")
    if cross:
        for beta in cross["betas"]:
            for gamma in cross["gammas"]:
                for offset in cross["alpha_offsets"]:
                    alpha = gamma + offset
                    order = _grid_nat(cross, "n_max")
                    row_sums = _row_sums(
                        catalan_family(alpha, beta, max(order, 1)),
                        catalan_gf(beta, gamma, max(order, 1)),
                        order,
                    )
                    for n in range(order + 1):
                        direct = eq2_lhs(alpha, beta, gamma, n, catalan)
                        census = signed_sum(beta, n, gamma, alpha)
                        params = {"alpha": alpha, "beta": beta, "gamma": gamma, "n": n}
                        if census != direct:
                            return _report("Eq2", grid, Counterexample.at(
                                params, census, direct, "involution census vs direct sum"))
                        if row_sums[n] != direct:
                            return _report("Eq2", grid, Counterexample.at(
                                params, row_sums[n], direct, "array row sum vs direct sum"))

    family = cfg.get("family")
    if family:
        order = _grid_nat(family, "order")
        for alpha_s in family["alphas"]:
            for beta_s in family["betas"]:
                for gamma_s in family["gammas"]:
                    alpha, beta, gamma = as_rat(alpha_s), as_rat(beta_s), as_rat(gamma_s)
                    r = catalan_family(alpha, beta, order)
                    a = catalan_gf(beta, gamma, order)
                    l = series_binpow(alpha - gamma, order)
                    params = {"alpha": alpha_s, "beta": beta_s, "gamma": gamma_s, "order": order}
                    if not riordan_theorem_check(r, a, l):
                        return _report("Eq2", grid, Counterexample.at(
                            params, "row sums", "target coefficients", "summation-matrix check"))
                    if not modified_riordan_check(r, a, l):
                        return _report("Eq2", grid, Counterexample.at(
                            params, "derivative form", "target coefficients",
                            "modified summation-matrix check"))
    return _report("Eq2", grid, None)


def _suite_eq3(cfg: Mapping) -> IdentityReport:
    p = tuple(cfg["p"])
    gammas = expand_interval(cfg["gamma"])
    alphas = expand_interval(cfg["alpha"])
    n_total_max = _grid_nat(cfg, "n_total_max")
    grid = (f"p={list(p)}, gamma in {_interval_text(cfg['gamma'])}, "
            f"alpha in {_interval_text(cfg['alpha'])}, sum(n)<={n_total_max}")
    for gamma in gammas:
        if gamma.denominator != 1:
            raise ConfigError("eq3 gamma grid must be integral")
        for alpha in alphas:
            rep = verify_eq3(p, int(gamma), alpha, n_total_max)
            if not rep.ok:
                return _report("Eq3", grid, rep.counterexample)
    return _report("Eq3", grid, None)


def _suite_eq4(cfg: Mapping) -> IdentityReport:
    alphas = expand_interval(cfg["alpha"])
    betas = expand_interval(cfg["beta"])
    gammas = expand_interval(cfg["gamma"])
    n_max = _grid_nat(cfg, "n_max")
    grid = (f"alpha in {_interval_text(cfg['alpha'])}, beta in {_interval_text(cfg['beta'])}, "
            f"gamma in {_interval_text(cfg['gamma'])}, n<={n_max}")
    for alpha in alphas:
        for beta in betas:
            for gamma in gammas:
                rep = verify_eq4(alpha, beta, gamma, n_max)
                if not rep.ok:
                    return _report("Eq4", grid, rep.counterexample)
    return _report("Eq4", grid, None)


def _suite_eq7(cfg: Mapping) -> IdentityReport:
    betas = expand_interval(cfg["beta"])
    gammas = expand_interval(cfg["gamma"])
    order = _grid_nat(cfg, "order")
    grid = (f"beta in {_interval_text(cfg['beta'])}, gamma in {_interval_text(cfg['gamma'])}, "
            f"order {order}")
    for beta in betas:
        for gamma in gammas:
            if not catalan_gf_functional_check(beta, gamma, order):
                params = {"beta": rat_str(beta), "gamma": rat_str(gamma), "order": order}
                return _report("Eq7", grid, Counterexample.at(
                    params, "gf composed with x(1-x)^(beta-1)", "(1-x)^(-gamma)"))
    return _report("Eq7", grid, None)


def _suite_eq8(cfg: Mapping) -> IdentityReport:
    betas = expand_interval(cfg["beta"])
    order = _grid_nat(cfg, "order")
    pairs = [(as_rat(a1), as_rat(a2)) for a1, a2 in cfg["alpha_pairs"]]
    grid = (f"beta in {_interval_text(cfg['beta'])}, alpha pairs "
            f"{[[rat_str(a), rat_str(b)] for a, b in pairs]}, order {order}")
    for beta in betas:
        for alpha1, alpha2 in pairs:
            if not convolution_check(beta, alpha1, alpha2, order):
                params = {"beta": rat_str(beta), "alpha1": rat_str(alpha1),
                          "alpha2": rat_str(alpha2), "order": order}
                return _report("Eq8", grid, Counterexample.at(
                    params, "gf(alpha1) * gf(alpha2)", "gf(alpha1 + alpha2)"))
    return _report("Eq8", grid, None)


def random_rational_sequence(rng: random.Random, length: int) -> list[Rat]:
    """Deterministic-from-seed sequence of small rationals."""
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(length)]


def _suite_eq9(cfg: Mapping) -> IdentityReport:
    length = _grid_nat(cfg, "length")
    count = _grid_nat(cfg, "sequences")
    seed = cfg.get("seed")
    if not isinstance(seed, int):
        raise ConfigError("eq9 needs an integer seed")
    pairs = [GouldPair(int(as_rat(a)), as_rat(m), as_rat(z)) for a, m, z in cfg["pairs"]]
    grid = f"{count} seeded sequences of length {length}, pairs {[str(p) for p in cfg['pairs']]}"
    rng = random.Random(seed)
    for index in range(count):
        seq = random_rational_sequence(rng, length)
        for pair in pairs:
            back = gould_backward(gould_forward(seq, pair), pair)
            fwd = gould_forward(gould_backward(seq, pair), pair)
            params = {"sequence": index, "a": pair.a,
                      "m": rat_str(pair.m), "z": rat_str(pair.z)}
            if back != seq:
                return _report("Eq9_roundtrip", grid, Counterexample.at(
                    params, [rat_str(v) for v in back], [rat_str(v) for v in seq],
                    "backward(forward) != id"))
            if fwd != seq:
                return _report("Eq9_roundtrip", grid, Counterexample.at(
                    params, [rat_str(v) for v in fwd], [rat_str(v) for v in seq],
                    "forward(backward) != id"))
    return _report("Eq9_roundtrip", grid, None)


def _suite_eq10(cfg: Mapping) -> IdentityReport:
    alphas = expand_interval(cfg["alpha"])
    betas = expand_interval(cfg["beta"])
    gammas = expand_interval(cfg["gamma"])
    n_max = _grid_nat(cfg, "n_max")
    grid = (f"alpha in {_interval_text(cfg['alpha'])}, beta in {_interval_text(cfg['beta'])}, "
            f"gamma in {_interval_text(cfg['gamma'])}, n<={n_max}")
    skipped: list[str] = []
    for alpha in alphas:
        for beta in betas:
            for gamma in gammas:
                rep = verify_eq10(alpha, beta, gamma, n_max)
                prefix = f"alpha={rat_str(alpha)}, beta={rat_str(beta)}, gamma={rat_str(gamma)}"
                skipped.extend(f"{prefix}, {item}" for item in rep.skipped)
                if not rep.ok:
                    return _report("Eq10", grid, rep.counterexample, skipped)
    return _report("Eq10", grid, None, skipped)


def _suite_closed_form(cfg: Mapping) -> IdentityReport:
    betas = expand_interval(cfg["beta"])
    gammas = expand_interval(cfg["gamma"])
    n_max = _grid_nat(cfg, "n_max")
    grid = (f"beta in {_interval_text(cfg['beta'])}, gamma in {_interval_text(cfg['gamma'])}, "
            f"n<={n_max}")
    for beta in betas:
        for gamma in gammas:
            rep = closed_form_reduction_check(beta, gamma, n_max)
            if not rep.ok:
                return _report("ClosedForm", grid, rep.counterexample)
    return _report("ClosedForm", grid, None)


def _corrupted_catalan(n: int, beta: RatLike, gamma: RatLike) -> Rat:
    """Test hook: the counting oracle, deliberately wrong at n = 2."""
    value = catalan_gen(n, beta, gamma)
    return value + 1 if n == 2 else value


def run_suite(config: Optional[Mapping] = None) -> list[IdentityReport]:
    """Run every identity check on its configured grid; deterministic order.

    ``config``, when given, must follow the DEFAULT_CONFIG layout.  The key
    "corrupt_catalan" (a test hook) swaps in a deliberately broken counting
    oracle so that failure reporting can be exercised end to end.
    """
    cfg = DEFAULT_CONFIG if config is None else config
    if not isinstance(cfg, Mapping):
        raise ConfigError("config must be a JSON object")
    unknown = set(cfg) - {"eq1", "eq2", "eq3", "eq4", "eq7", "eq8", "eq9", "eq10",
                          "closed_form", "corrupt_catalan"}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    catalan = _corrupted_catalan if cfg.get("corrupt_catalan") else catalan_gen

    reports: list[IdentityReport] = []
    try:
        if "eq1" in cfg:
            n_max = _grid_nat(cfg["eq1"], "n_max")
            rep = verify_eq2(1, 2, 1, n_max, catalan)
            reports.append(_report("Eq1", f"alpha=1, beta=2, gamma=1, n<={n_max}",
                                   rep.counterexample))
        if "eq2" in cfg:
            reports.append(_suite_eq2(cfg["eq2"], catalan))
        if "eq3" in cfg:
            reports.append(_suite_eq3(cfg["eq3"]))
        if "eq4" in cfg:
            reports.append(_suite_eq4(cfg["eq4"]))
        if "eq7" in cfg:
            reports.append(_suite_eq7(cfg["eq7"]))
        if "eq8" in cfg:
            reports.append(_suite_eq8(cfg["eq8"]))
        if "eq9" in cfg:
            reports.append(_suite_eq9(cfg["eq9"]))
        if "eq10" in cfg:
            reports.append(_suite_eq10(cfg["eq10"]))
        if "closed_form" in cfg:
            reports.append(_suite_closed_form(cfg["closed_form"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"malformed config: {exc}") from exc
    return reports


def load_config(text: str) -> dict:
    """Parse a JSON grid config; raises ConfigError on malformed input."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    return obj


def reports_to_json(reports: Sequence[IdentityReport]) -> str:
    """Stable JSON rendering of a report list."""
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)
