"""Generic degree, composition with maps P^1 -> P^1, and non-proper codimensions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .errors import NotCoprimeError, PartitionError, RetryBudgetExceeded
from .forms import BinaryForm, form_gcd, gcd_many
from .strata import as_partition, enumerate_mu_types, stratum_dim
from .syzygy import Parametrization


@dataclass(frozen=True)
class Witness:
    alpha: BinaryForm
    beta: BinaryForm
    reduced_curve: Parametrization


@dataclass(frozen=True)
class PropernessReport:
    generic_degree: int
    image_degree: int
    attempts: int
    witness: Witness | None = None

    def to_json(self) -> dict:
        return {
            "genericDegree": self.generic_degree,
            "imageDegree": self.image_degree,
            "attempts": self.attempts,
        }


def fiber_degree(P: Parametrization, point) -> int:
    """Degree of the gcd of the cross forms b_i * p_j - b_j * p_i at ``point = (s0, t0)``."""
    field = P.field
    b = P.reduced_forms
    values = [f(*point) for f in b]
    cross = []
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            form = b[i].scale(values[j]) - b[j].scale(values[i])
            if not form.is_zero():
                cross.append(form)
    return gcd_many(cross).degree


def _random_point(field, rng):
    while True:
        pt = (field.random(rng, 10**6), field.random(rng, 10**6))
        if any(pt):
            return pt


def generic_degree(P: Parametrization, rng=None, max_attempts: int = 8, witness=None) -> PropernessReport:
    """Fiber size over a generic image point, certified by two agreeing draws."""
    if rng is None or isinstance(rng, int):
        rng = random.Random(0 if rng is None else rng)
    seen = {}
    for attempt in range(1, max_attempts + 1):
        k = fiber_degree(P, _random_point(P.field, rng))
        seen[k] = seen.get(k, 0) + 1
        if seen[k] == 2:
            N = P.n - P.c
            if N % k:
                raise AssertionError(f"fiber degree {k} does not divide n - c = {N}")
            return PropernessReport(k, N // k, attempt, witness)
    raise RetryBudgetExceeded(
        f"no two of {max_attempts} random fibers agreed (saw {sorted(seen)}); "
        "the field may be too small"
    )


def compose_parametrization(b: Parametrization, alpha: BinaryForm, beta: BinaryForm) -> Parametrization:
    """The curve ``b(alpha, beta)`` of degree ``k * m``."""
    if form_gcd(alpha, beta).degree != 0:
        raise NotCoprimeError("alpha and beta share a common factor")
    return Parametrization(tuple(f.compose(alpha, beta) for f in b.forms))


def admissible_generic_degrees(n: int, d: int):
    return [k for k in range(2, n + 1) if n % k == 0 and n >= k * d]


def strata_admitting_degree(n: int, d: int, k: int):
    if k < 2:
        raise PartitionError("generic degree k must be > 1")
    return [mu for mu in enumerate_mu_types(n, d) if all(x % k == 0 for x in mu)]


def s_statistic(mu) -> int:
    """sum over i > j of max(0, mu_i - mu_j)."""
    return sum(max(0, mu[i] - mu[j]) for i in range(len(mu)) for j in range(i))


def non_proper_codim(mu, k: int, n: int, d: int):
    """Codimension of the generic-degree-k locus in the stratum, and its lower bound.

    Returns ``(codim, lower_bound)``.
    """
    mu = as_partition(mu)
    if len(mu) != d or sum(mu) != n:
        raise PartitionError(f"{mu} is not a {d}-part partition of {n}")
    if k < 2 or any(x % k for x in mu):
        raise PartitionError(f"k = {k} does not divide every part of {mu}")
    m = n // k
    mu_tilde = tuple(x // k for x in mu)
    codim = (k - 1) * (m * (d + 1) - s_statistic(mu_tilde) - 2)
    bound = (k - 1) * (d * (d - 1) + 2 * m - 2)
    if not codim >= bound > 0:
        raise AssertionError(f"codimension {codim} violates the lower bound {bound}")
    return codim, bound


def non_proper_locus_dim(mu, k: int, n: int, d: int) -> int:
    """dim of the reduced stratum plus 2(k-1): the dimension count behind the codimension."""
    mu = as_partition(mu)
    mu_tilde = tuple(x // k for x in mu)
    return stratum_dim(mu_tilde, n // k, d) + 2 * (k - 1)


def mu_gcd(mu) -> int:
    return gcd(*mu)
