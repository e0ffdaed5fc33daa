"""Random parametrizations with a prescribed mu-type, generic degree or KPU form.

Curves are built in the Hilbert-Burch direction: draw a (d+1) x d matrix of
forms whose column degrees are the target mu, take signed maximal minors and
multiply by a random common factor.  Draws that miss the target stratum are
rejected.  All randomness comes from a ``random.Random`` seeded by the
caller, so a seed fixes the output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import LinearDependenceError, MustrataError, SamplingError
from .fields import QQ, Field
from .forms import BinaryForm, FormMatrix, form_gcd
from .properness import compose_parametrization, generic_degree
from .strata import as_partition
from .syzygy import Parametrization, mu_basis

COEFF_BOUND = 20


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


@dataclass(frozen=True)
class SampleSpec:
    mu: tuple
    n: int
    d: int
    seed: int = 0
    field: Field = QQ
    max_attempts: int = 32

    def __post_init__(self):
        mu = as_partition(self.mu)
        object.__setattr__(self, "mu", mu)
        if len(mu) != self.d:
            raise MustrataError(f"mu = {mu} must have d = {self.d} parts")
        if not self.d <= sum(mu) <= self.n:
            raise MustrataError(f"need d <= |mu| <= n, got |mu| = {sum(mu)}, n = {self.n}")

    @property
    def common_factor_degree(self) -> int:
        return self.n - sum(self.mu)


@dataclass(frozen=True)
class Sample:
    curve: Parametrization
    attempts: int


def random_form(field, degree, rng):
    return BinaryForm.random(field, degree, rng, COEFF_BOUND)


def _minors_curve(columns, h=None):
    forms = FormMatrix(columns).signed_minors()
    if h is not None:
        forms = [f * h for f in forms]
    return Parametrization(tuple(forms))


def sample_in_stratum_with_attempts(spec: SampleSpec, rng=None) -> Sample:
    rng = _rng(spec.seed if rng is None else rng)
    field, d = spec.field, spec.d
    for attempt in range(1, spec.max_attempts + 1):
        columns = [[random_form(field, m, rng) for _ in range(d + 1)] for m in spec.mu]
        h = random_form(field, spec.common_factor_degree, rng)
        if h.is_zero():
            continue
        try:
            P = _minors_curve(columns, h)
        except LinearDependenceError:
            continue
        if P.c == spec.common_factor_degree and mu_basis(P).mu == spec.mu:
            return Sample(P, attempt)
    raise SamplingError(f"no sample of type {spec.mu} at n={spec.n} after {spec.max_attempts} attempts")


def sample_in_stratum(spec: SampleSpec, rng=None) -> Parametrization:
    return sample_in_stratum_with_attempts(spec, rng).curve


def kpu_matrix(variant: int, r):
    """The 4 x 3 normal forms for mu = (1,1,n-2) with last column r_0..r_3."""
    field = r[0].field
    s, t = BinaryForm.s(field), BinaryForm.t(field)
    z = BinaryForm.zero(field, 1)
    if variant == 1:
        first, second = [s, t, z, z], [z, z, s, t]
    elif variant == 2:
        first, second = [s, t, z, z], [z, s, t, z]
    else:
        raise MustrataError("KPU variant must be 1 or 2")
    return FormMatrix([first, second, list(r)])


def sample_kpu(variant: int, n: int, seed=0, field: Field = QQ, max_attempts: int = 32) -> Parametrization:
    if n < 4:
        raise MustrataError("KPU normal forms need n >= 4")
    rng = _rng(seed)
    s, t = BinaryForm.s(field), BinaryForm.t(field)
    for _ in range(max_attempts):
        r = [random_form(field, n - 2, rng) for _ in range(4)]
        try:
            P = Parametrization(tuple(kpu_matrix(variant, r).signed_minors()))
        except LinearDependenceError:
            continue
        if P.c != 0 or mu_basis(P).mu != (1, 1, n - 2):
            continue
        a = P.forms
        if variant == 1:
            h1 = s * r[3] - t * r[2]
            h2 = s * r[1] - t * r[0]
            shape = (t * h1, -(s * h1), -(t * h2), s * h2)
        else:
            h1 = r[3]
            shape = (t * t * h1, -(s * t * h1), s * s * h1, a[3])
        if tuple(a) != shape:
            raise AssertionError(f"KPU{variant} minors do not have the expected shape")
        return P
    raise SamplingError(f"KPU{variant} sampling at n={n} failed {max_attempts} times")


def random_coprime_pair(field, k: int, rng, max_attempts: int = 32):
    for _ in range(max_attempts):
        alpha, beta = random_form(field, k, rng), random_form(field, k, rng)
        if alpha.is_zero() or beta.is_zero():
            continue
        if form_gcd(alpha, beta).degree == 0:
            return alpha, beta
    raise SamplingError(f"could not draw a coprime pair of degree {k}")


def sample_non_proper(mu_tilde, k: int, d: int | None = None, seed=0, field: Field = QQ,
                      max_attempts: int = 32, with_witness: bool = False):
    """A curve of generic degree k in the stratum k * mu_tilde."""
    mu_tilde = as_partition(mu_tilde)
    d = len(mu_tilde) if d is None else d
    m = sum(mu_tilde)
    rng = _rng(seed)
    spec = SampleSpec(mu_tilde, m, d, field=field, max_attempts=max_attempts)
    for _ in range(max_attempts):
        b = sample_in_stratum(spec, rng)
        if generic_degree(b, rng).generic_degree != 1:
            continue
        alpha, beta = random_coprime_pair(field, k, rng)
        P = compose_parametrization(b, alpha, beta)
        mu = mu_basis(P).mu
        if mu != tuple(k * x for x in mu_tilde):
            raise AssertionError(f"composed curve has mu = {mu}, expected k * {mu_tilde}")
        report = generic_degree(P, rng)
        if report.generic_degree != k:
            raise AssertionError(f"composed curve has generic degree {report.generic_degree}, expected {k}")
        if with_witness:
            from .properness import Witness
            return P, Witness(alpha, beta, b)
        return P
    raise SamplingError(f"could not draw a proper curve of type {mu_tilde}")
