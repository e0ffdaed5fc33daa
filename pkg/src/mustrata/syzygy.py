"""mu-bases, mu-types and ideal Hilbert functions of parametrizations.

The mu-basis is built by a degree sweep.  After dividing out the gcd, the
degree-m syzygies are a kernel; those not already generated by the
syzygies of degree m-1 (times s and t) give new basis columns.  Freeness of
the syzygy module over k[s,t] means this stops with exactly d columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DegreeMismatchError, LinearDependenceError, MustrataError
from .fields import Field
from .forms import BinaryForm, FormMatrix, gcd_many
from .linalg import complement, kernel_basis, rank
from .strata import HilbertFunction, ideal_hilbert_value


@dataclass(frozen=True, eq=False)
class Parametrization:
    forms: tuple

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        if len(forms) < 3:
            raise MustrataError("need d+1 >= 3 forms (d >= 2)")
        field = forms[0].field
        for f in forms:
            field.check_same(f.field)
        degrees = {f.degree for f in forms}
        if len(degrees) != 1:
            raise DegreeMismatchError(f"forms have mixed degrees {sorted(degrees)}")
        if self.n < self.d:
            raise MustrataError(f"need n >= d, got n={self.n}, d={self.d}")
        if rank([f.coeffs for f in forms], self.n + 1, field) != self.d + 1:
            raise LinearDependenceError("the forms are linearly dependent")

    @property
    def field(self) -> Field:
        return self.forms[0].field

    @property
    def d(self) -> int:
        return len(self.forms) - 1

    @property
    def n(self) -> int:
        return self.forms[0].degree

    @cached_property
    def common_factor(self) -> BinaryForm:
        return gcd_many(self.forms)

    @property
    def c(self) -> int:
        return self.common_factor.degree

    @cached_property
    def reduced_forms(self) -> tuple:
        h = self.common_factor
        if h.degree == 0:
            return self.forms
        return tuple(f.divide_exact(h) for f in self.forms)

    def __eq__(self, other):
        if not isinstance(other, Parametrization):
            return NotImplemented
        return self.forms == other.forms

    def __hash__(self):
        return hash(self.forms)


def multiplication_matrix(forms, m: int):
    """Matrix of (A_0..A_d) -> sum A_i f_i from R_m^(d+1) to R_(m+n).

    Column ``i*(m+1) + j`` is the coefficient of ``s^(m-j) t^j`` in A_i.
    """
    n = forms[0].degree
    field = forms[0].field
    ncols = len(forms) * (m + 1)
    rows = [[field.zero] * ncols for _ in range(m + n + 1)]
    for i, f in enumerate(forms):
        for j in range(m + 1):
            col = i * (m + 1) + j
            for ell, c in enumerate(f.coeffs):
                if c:
                    rows[j + ell][col] = c
    return rows, ncols


def _unflatten(vec, nforms, m, field):
    return tuple(BinaryForm._raw(field, vec[i * (m + 1):(i + 1) * (m + 1)]) for i in range(nforms))


def _shift(vec, nforms, m, by_t: bool, field):
    # multiply a flattened degree-m syzygy by s (append 0) or t (prepend 0)
    out = []
    z = field.zero
    for i in range(nforms):
        block = vec[i * (m + 1):(i + 1) * (m + 1)]
        out.extend([z] + block if by_t else block + [z])
    return out


def _syzygy_vectors(forms, m):
    rows, ncols = multiplication_matrix(forms, m)
    return kernel_basis(rows, ncols, forms[0].field)


def syzygy_space(P: Parametrization, m: int):
    """Basis of all degree-m syzygies of P, as (d+1)-tuples of forms."""
    if m < 0:
        raise MustrataError("syzygy degree must be >= 0")
    return [_unflatten(v, P.d + 1, m, P.field) for v in _syzygy_vectors(P.forms, m)]


@dataclass(frozen=True, eq=False)
class MuBasisResult:
    matrix: FormMatrix
    mu: tuple
    gcd: BinaryForm
    reduced_forms: tuple
    scale: object  # minors = scale * reduced_forms

    def to_json(self) -> dict:
        from .serialize import form_to_json

        field = self.gcd.field
        return {
            "mu": list(self.mu),
            "columnDegrees": list(self.matrix.column_degrees),
            "columns": [[form_to_json(e) for e in col] for col in self.matrix.columns],
            "gcd": form_to_json(self.gcd),
            "reducedForms": [form_to_json(b) for b in self.reduced_forms],
            "lambda": field.encode(self.scale),
        }


def mu_basis(P: Parametrization) -> MuBasisResult:
    field = P.field
    b = P.reduced_forms
    N = b[0].degree
    k = P.d + 1
    generators = []  # (degree, flattened vector)
    previous = []
    for m in range(1, N + 1):
        syz = _syzygy_vectors(b, m)
        image = [_shift(v, k, m - 1, by_t, field) for v in previous for by_t in (False, True)]
        for vec in complement(image, syz, k * (m + 1), field):
            generators.append((m, vec))
        if len(generators) >= P.d:
            break
        previous = syz
    if len(generators) != P.d:
        raise AssertionError(f"degree sweep found {len(generators)} generators, expected {P.d}")
    columns = [_unflatten(vec, k, m, field) for m, vec in generators]
    matrix = FormMatrix(columns)
    verdict = verify_mu_basis(P, matrix)
    if not verdict:
        raise AssertionError(f"mu-basis self-check failed: {verdict.reason}")
    return MuBasisResult(matrix, matrix.column_degrees, P.common_factor, b, verdict.scale)


def mu_type(P: Parametrization):
    """Return ``(mu, c)`` with c the degree of the gcd."""
    return mu_basis(P).mu, P.c


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    scale: object = None

    def __bool__(self):
        return self.ok


def verify_mu_basis(P: Parametrization, A: FormMatrix) -> Verdict:
    """Check B*A = 0, the degree sum, and that signed minors are lambda * b_i."""
    if A.shape != (P.d + 1, P.d):
        return Verdict(False, f"shape {A.shape}, expected {(P.d + 1, P.d)}")
    field = P.field
    for j, col in enumerate(A.columns):
        total = None
        for a, entry in zip(P.forms, col):
            term = a * entry
            total = term if total is None else total + term
        if not total.is_zero():
            return Verdict(False, f"column {j} is not a syzygy")
    if sum(A.column_degrees) != P.n - P.c:
        return Verdict(False, f"degree sum {sum(A.column_degrees)} != n - c = {P.n - P.c}")
    minors = A.signed_minors()
    b = P.reduced_forms
    i0 = next(i for i, f in enumerate(b) if not f.is_zero())
    j0 = next(j for j, c in enumerate(b[i0].coeffs) if c)
    scale = field.norm(minors[i0].coeffs[j0] * field.inv(b[i0].coeffs[j0]))
    if not scale:
        return Verdict(False, "maximal minors vanish")
    for i, (mi, bi) in enumerate(zip(minors, b)):
        if mi != bi.scale(scale):
            return Verdict(False, f"minor {i} is not lambda * b_{i}")
    return Verdict(True, "ok", scale)


def hilbert_ranks(P: Parametrization, top: int):
    """H(m) = dim R_m - dim I_m for m = 0..top, by rank computation."""
    values = []
    for m in range(top + 1):
        if m < P.n:
            values.append(m + 1)
            continue
        rows, ncols = multiplication_matrix(P.forms, m - P.n)
        values.append(m + 1 - rank(rows, ncols, P.field))
    return values


def hilbert_of_ideal(P: Parametrization, mu=None) -> HilbertFunction:
    """Hilbert function of R/I, by ranks and by the closed form; both must agree."""
    if mu is None:
        mu = mu_basis(P).mu
    top = P.n + max(mu)
    by_rank = hilbert_ranks(P, top)
    closed = [ideal_hilbert_value(mu, P.n, P.d, m) for m in range(top + 1)]
    if by_rank != closed:
        raise AssertionError(f"Hilbert function mismatch: ranks {by_rank} vs closed form {closed}")
    return HilbertFunction(tuple(by_rank))
