"""Ancestor ideals, scroll partitions and rational normal scroll containment.

The ancestor ideal of I = <a_0..a_d> (all a_i of degree n) is the largest
homogeneous ideal agreeing with I from degree n on.  Its degree-m piece is
computed top-down: W_n = span(a_i) and W_m = {f : s f, t f in W_(m+1)}.
Minimal generators are the pieces of W_m not reached from W_(m-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import NotCoprimeError, PartitionError
from .forms import BinaryForm
from .linalg import complement, kernel_basis, rank, rref
from .strata import as_partition, dim_R, gap_sum, partitions, mu_leq
from .syzygy import Parametrization, Verdict, hilbert_ranks, mu_basis


@dataclass(frozen=True, eq=False)
class AncestorDecomposition:
    curve: Parametrization
    generators: tuple  # deg h_1 >= ... >= deg h_tau
    mu: tuple
    w_dims: tuple  # dim W_m for m = 0..n

    @property
    def tau(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> tuple:
        return tuple(h.degree for h in self.generators)

    @property
    def scroll_partition(self) -> tuple:
        n = self.curve.n
        return tuple(n + 1 - h.degree for h in self.generators)

    def to_json(self) -> dict:
        from .serialize import form_to_json

        return {
            "generators": [form_to_json(h) for h in self.generators],
            "tau": self.tau,
            "scrollPartition": list(self.scroll_partition),
        }


@dataclass(frozen=True)
class ScrollInfo:
    partition: tuple
    tau: int
    scroll_dim: int
    scroll_degree: int
    ambient: int

    @property
    def is_ambient(self) -> bool:
        """True when the scroll is all of P^d (tau >= d)."""
        return self.tau >= self.ambient

    @property
    def name(self) -> str:
        return "S_{" + ",".join(str(a - 1) for a in self.partition) + "}"


def _shift_rows(rows, by_t: bool, zero):
    return [[zero] + list(r) if by_t else list(r) + [zero] for r in rows]


def ancestor_pieces(P: Parametrization):
    """Bases (rref rows) of W_m for m = 0..n."""
    field, n = P.field, P.n
    W = {n: rref([f.coeffs for f in P.forms], n + 1, field)[0]}
    # annihilator of W_(m+1): its rows are functionals vanishing on W_(m+1)
    ann = kernel_basis(W[n], n + 1, field)
    for m in range(n - 1, -1, -1):
        constraints = [y[:-1] for y in ann] + [y[1:] for y in ann]
        if constraints:
            basis = kernel_basis(constraints, m + 1, field)
            ann = rref(constraints, m + 1, field)[0]
        else:
            basis = [[field.one if i == j else field.zero for j in range(m + 1)] for i in range(m + 1)]
            ann = []
        W[m] = rref(basis, m + 1, field)[0]
    return [W[m] for m in range(n + 1)]


def ancestor_ideal(P: Parametrization, mu=None) -> AncestorDecomposition:
    if P.c != 0:
        raise NotCoprimeError("ancestor ideals are computed for relatively prime forms only")
    field, n, d = P.field, P.n, P.d
    if mu is None:
        mu = mu_basis(P).mu
    W = ancestor_pieces(P)
    found = []
    for m in range(n + 1):
        below = W[m - 1] if m else []
        image = _shift_rows(below, False, field.zero) + _shift_rows(below, True, field.zero)
        for vec in complement(image, W[m], m + 1, field):
            found.append(BinaryForm._raw(field, vec))
    # stable sort keeps pivot order within a degree
    gens = tuple(sorted(found, key=lambda h: -h.degree))
    dec = AncestorDecomposition(P, gens, tuple(mu), tuple(len(w) for w in W))

    alphas = dec.scroll_partition
    if sum(alphas) != d + 1:
        raise AssertionError(f"scroll partition {alphas} does not sum to d+1 = {d + 1}")
    expected_tau = d + 1 - sum(1 for x in mu if x == 1)
    if dec.tau != expected_tau:
        raise AssertionError(f"tau = {dec.tau}, expected d+1-#{{mu_i=1}} = {expected_tau}")
    if not direct_sum_check(dec):
        raise AssertionError("I_n is not the direct sum of the generator multiples")
    return dec


def adapted_basis(dec: AncestorDecomposition):
    """The forms s^(alpha_i-1-j) t^j h_i, block by block."""
    out = []
    n = dec.curve.n
    for h in dec.generators:
        alpha = n + 1 - h.degree
        out.extend(h.times_monomial(alpha - 1 - j, j) for j in range(alpha))
    return out


def direct_sum_check(dec: AncestorDecomposition) -> bool:
    P = dec.curve
    adapted = [f.coeffs for f in adapted_basis(dec)]
    both = adapted + [f.coeffs for f in P.forms]
    return (len(adapted) == P.d + 1
            and rank(adapted, P.n + 1, P.field) == P.d + 1
            and rank(both, P.n + 1, P.field) == P.d + 1)


def scroll_info(dec: AncestorDecomposition, d: int) -> ScrollInfo:
    tau = dec.tau
    if tau <= d - 1:
        return ScrollInfo(dec.scroll_partition, tau, tau, d + 1 - tau, d)
    return ScrollInfo(dec.scroll_partition, tau, d, 1, d)


def verify_scroll_containment(P: Parametrization, dec: AncestorDecomposition) -> Verdict:
    """Check the curve lies on the scroll of its partition, in adapted coordinates."""
    if not direct_sum_check(dec) or dec.curve.forms != P.forms:
        return Verdict(False, "adapted forms do not span the same space as the curve")
    coords = []  # blocks of adapted coordinates
    pos = 0
    for h in dec.generators:
        alpha = P.n + 1 - h.degree
        coords.append(list(range(pos, pos + alpha)))
        pos += alpha
    x = adapted_basis(dec)
    top, bottom = [], []
    for block in coords:
        for j in range(len(block) - 1):
            top.append(block[j])
            bottom.append(block[j + 1])
    for p in range(len(top)):
        for q in range(p + 1, len(top)):
            minor = x[top[p]] * x[bottom[q]] - x[top[q]] * x[bottom[p]]
            if not minor.is_zero():
                return Verdict(False, f"minor x{top[p]}*x{bottom[q]} - x{top[q]}*x{bottom[p]} != 0")
    return Verdict(True, "ok")


def _check_pair(mu, A, n, d):
    mu = as_partition(mu)
    A = as_partition(A)
    if len(mu) != d or sum(mu) != n:
        raise PartitionError(f"{mu} is not a {d}-part partition of {n}")
    if sum(A) != d + 1:
        raise PartitionError(f"scroll partition {A} does not sum to d+1 = {d + 1}")
    tau = d + 1 - sum(1 for x in mu if x == 1)
    if len(A) != tau:
        raise PartitionError(f"scroll partition {A} has {len(A)} parts; mu forces tau = {tau}")
    return mu, A


def substratum_dim(mu, A, n: int, d: int) -> int:
    mu, A = _check_pair(mu, A, n, d)
    return (d + 1) * (n + 1) - gap_sum(mu) - gap_sum(A)


def substratum_closure(mu, A):
    A = as_partition(A)
    return [B for B in partitions(sum(A), len(A)) if mu_leq(B, A)]


def scroll_partitions_for(mu, d: int):
    tau = d + 1 - sum(1 for x in mu if x == 1)
    return list(partitions(d + 1, tau))


def ancestor_hilbert_value(mu, A, n: int, d: int, m: int) -> int:
    # tau generators carry tau - 1 = #{mu_i > 1} syzygies, of degrees n + mu_i
    degs = [n + 1 - a for a in A]
    return dim_R(m) - sum(dim_R(m - e) for e in degs) + sum(dim_R(m - n - x) for x in mu if x > 1)


def ancestor_hilbert_closed(mu, A, n: int, d: int):
    top = n + max(mu)
    return [ancestor_hilbert_value(mu, A, n, d, m) for m in range(top + 1)]


def ancestor_hilbert(dec: AncestorDecomposition, mu=None, n=None, d=None):
    """Hilbert function of R / ancestor ideal; closed form checked against ranks."""
    P = dec.curve
    mu = dec.mu if mu is None else tuple(mu)
    n = P.n if n is None else n
    d = P.d if d is None else d
    closed = ancestor_hilbert_closed(mu, dec.scroll_partition, n, d)
    top = len(closed) - 1
    ideal = hilbert_ranks(P, top)
    by_rank = [m + 1 - dec.w_dims[m] if m <= n else ideal[m] for m in range(top + 1)]
    if closed != by_rank:
        raise AssertionError(f"ancestor Hilbert mismatch: closed {closed} vs ranks {by_rank}")
    from .strata import HilbertFunction

    return HilbertFunction(tuple(closed))


def scroll_leq(A1, A2) -> bool:
    """Prefix-sum order; a shorter partition is padded with leading zeros."""
    width = max(len(A1), len(A2))
    a = (0,) * (width - len(A1)) + tuple(A1)
    b = (0,) * (width - len(A2)) + tuple(A2)
    return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))


def ancestor_order_equiv(mu1, A1, mu2, A2, n: int, d: int):
    """Both sides of: H1 >=_P H2  <=>  mu1 <= mu2 and A1 <= A2."""
    H1 = ancestor_hilbert_closed(mu1, A1, n, d)
    H2 = ancestor_hilbert_closed(mu2, A2, n, d)
    top = max(len(H1), len(H2)) - 1
    h1 = lambda m: H1[min(m, len(H1) - 1)]
    h2 = lambda m: H2[min(m, len(H2) - 1)]
    lhs = (all(h1(m) >= h2(m) for m in range(n, top + 1))
           and all(h1(m) <= h2(m) for m in range(n + 1)))
    rhs = mu_leq(mu1, mu2) and scroll_leq(A1, A2)
    return lhs, rhs
