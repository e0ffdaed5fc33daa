"""Regression runner: the acceptance criteria and the worked examples.

Each ``criterion_*`` function returns a :class:`CheckResult`.  Sampled
criteria share one seeded pool of curves over F_p so a run is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

from .ancestor import (
    ancestor_hilbert,
    ancestor_ideal,
    ancestor_order_equiv,
    scroll_info,
    scroll_partitions_for,
    substratum_closure,
    substratum_dim,
    verify_scroll_containment,
)
from .fields import GF, QQ
from .forms import BinaryForm
from .properness import (
    admissible_generic_degrees,
    compose_parametrization,
    generic_degree,
    non_proper_codim,
    non_proper_locus_dim,
    s_statistic,
    strata_admitting_degree,
)
from .sampler import SampleSpec, sample_in_stratum, sample_kpu, sample_non_proper
from .strata import (
    closure_set,
    enumerate_mu_types,
    extremal_mu,
    grass_codim,
    hasse_diagram,
    ideal_hilbert_value,
    mu_from_hilbert,
    mu_leq,
    stratum_dim,
    tail_hilbert_from_mu,
)
from .syzygy import Parametrization, hilbert_ranks, mu_basis, mu_type, syzygy_space, verify_mu_basis

SAMPLE_GRID = ((6, 3), (9, 3), (7, 4), (12, 3))
SEEDS_PER_STRATUM = 3
KPU_SIZES = (4, 5, 6, 8)
KPU_SEEDS = 7
NON_PROPER_CASES = (  # (mu_tilde, k): the generic-degree strata of P_(12,3), plus (3,3,3) at n = 9
    ((1, 1, 1), 4),
    ((1, 1, 2), 3),
    ((2, 2, 2), 2),
    ((1, 2, 3), 2),
    ((1, 1, 4), 2),
    ((1, 1, 1), 3),
)
NON_PROPER_SEEDS = 9


@dataclass
class CheckResult:
    ident: str
    title: str
    ok: bool = True
    failures: list = dc_field(default_factory=list)
    count: int = 0

    def expect(self, cond, message):
        self.count += 1
        if not cond:
            self.ok = False
            self.failures.append(message)
        return cond

    def equal(self, got, want, what):
        return self.expect(got == want, f"{what}: got {got}, expected {want}")

    @property
    def detail(self) -> str:
        if self.ok:
            return f"{self.count} checks"
        shown = "; ".join(self.failures[:3])
        more = f" (+{len(self.failures) - 3} more)" if len(self.failures) > 3 else ""
        return f"{len(self.failures)}/{self.count} failed: {shown}{more}"


@lru_cache(maxsize=None)
def stratum_samples():
    """Seeded F_p samples over every stratum (common factors included) of the grid."""
    field = GF()
    out = []
    for n, d in SAMPLE_GRID:
        for mu in enumerate_mu_types(n, d, True):
            for seed in range(SEEDS_PER_STRATUM):
                spec = SampleSpec(mu, n, d, seed=1000 * n + 100 * d + seed, field=field)
                out.append((spec, sample_in_stratum(spec)))
    return tuple(out)


@lru_cache(maxsize=None)
def kpu_samples():
    return tuple((v, n, s, sample_kpu(v, n, seed=s))
                 for v in (1, 2) for n in KPU_SIZES for s in range(KPU_SEEDS))


def _diagram_dims(n, d, in_cp=False):
    return {node.mu: node.dim for node in hasse_diagram(n, d, in_cp).nodes}


def criterion_1() -> CheckResult:
    r = CheckResult("1", "stratification tables")
    r.equal(_diagram_dims(6, 3), {(2, 2, 2): 28, (1, 2, 3): 27, (1, 1, 4): 24}, "(6,3) dims")
    g = hasse_diagram(9, 3)
    r.equal([x.dim for x in g.nodes], [40, 39, 36, 36, 35, 33, 30], "(9,3) dims")
    r.equal(sorted(g.covers_of((2, 3, 4))), [(1, 4, 4), (2, 2, 5)], "(9,3) covers of (2,3,4)")
    r.expect(not mu_leq((1, 4, 4), (2, 2, 5)) and not mu_leq((2, 2, 5), (1, 4, 4)),
             "(1,4,4) and (2,2,5) should be incomparable")
    g = hasse_diagram(6, 3, True)
    r.equal([x.dim for x in g.nodes], [28, 27, 25, 24, 23, 22, 19], "(6,3) with common factor dims")
    r.equal(sorted(g.covers_of((1, 2, 3))), [(1, 1, 4), (1, 2, 2)], "(6,3) covers of (1,2,3)")
    return r


def criterion_2() -> CheckResult:
    r = CheckResult("2", "non-proper codimensions")
    r.equal(non_proper_codim((3, 3, 3), 3, 9, 3)[0], 20, "(3,3,3), k=3")
    for mu, k, want in (((4, 4, 4), 4, 30), ((3, 3, 6), 3, 24), ((4, 4, 4), 2, 22),
                        ((2, 4, 6), 2, 18), ((2, 2, 8), 2, 18)):
        r.equal(non_proper_codim(mu, k, 12, 3)[0], want, f"{mu}, k={k}")
    codim, bound = non_proper_codim((3, 3, 3), 3, 9, 3)
    r.expect(codim == bound == 20, f"sharpness at k=d=m=3: codim {codim}, bound {bound}")
    return r


def criterion_3() -> CheckResult:
    r = CheckResult("3", "admissible generic degrees")
    r.equal(admissible_generic_degrees(12, 3), [2, 3, 4], "(12,3) degrees")
    r.equal(strata_admitting_degree(12, 3, 4), [(4, 4, 4)], "k=4 strata")
    r.equal(strata_admitting_degree(12, 3, 3), [(3, 3, 6)], "k=3 strata")
    r.equal(sorted(strata_admitting_degree(12, 3, 2)), sorted([(4, 4, 4), (2, 4, 6), (2, 2, 8)]), "k=2 strata")
    return r


def criterion_4() -> CheckResult:
    r = CheckResult("4", "plane curves")
    for n in range(4, 11):
        for mu in range(1, n // 2 + 1):
            want = 3 * (n + 1) if mu == n // 2 else 2 * n + 2 * mu + 4
            r.equal(stratum_dim((mu, n - mu), n, 2), want, f"dim ({mu},{n - mu})")
            below = [(x, n - x) for x in range(1, mu + 1)]
            r.equal(sorted(closure_set((mu, n - mu), n, 2)), below, f"closure of ({mu},{n - mu})")
    return r


def criterion_5() -> CheckResult:
    r = CheckResult("5", "mu-basis oracle")
    samples = stratum_samples()
    r.expect(len(samples) >= 200, f"only {len(samples)} samples")
    for spec, P in samples:
        where = f"{spec.mu} n={spec.n} seed={spec.seed}"
        res = mu_basis(P)
        verdict = verify_mu_basis(P, res.matrix)
        r.expect(bool(verdict), f"{where}: {verdict.reason}")
        r.equal((res.mu, P.c), (spec.mu, spec.common_factor_degree), f"{where} type")
        for m in range(P.n + 1):
            want = sum(max(0, m - x + 1) for x in res.mu)
            r.equal(len(syzygy_space(P, m)), want, f"{where} syzygies of degree {m}")
    return r


def criterion_6() -> CheckResult:
    r = CheckResult("6", "Hilbert cross-checks")
    for spec, P in stratum_samples():
        mu = mu_basis(P).mu
        top = P.n + max(mu)
        closed = [ideal_hilbert_value(mu, P.n, P.d, m) for m in range(top + 1)]
        r.equal(hilbert_ranks(P, top), closed, f"{spec.mu} n={spec.n} seed={spec.seed}")
    for n, d in ((9, 3), (12, 3)):
        for mu in enumerate_mu_types(n, d, True):
            r.equal(mu_from_hilbert(tail_hilbert_from_mu(mu, n, d), n, d), mu, f"round trip {mu} at n={n}")
    types = enumerate_mu_types(9, 3)
    for a in types:
        Ta = tail_hilbert_from_mu(a, 9, 3)
        for b in types:
            lhs = mu_leq(a, b)
            rhs = Ta >= tail_hilbert_from_mu(b, 9, 3)
            r.expect(lhs == rhs, f"order vs Hilbert at {a}, {b}: {lhs} vs {rhs}")
    return r


def criterion_7() -> CheckResult:
    r = CheckResult("7", "properness")
    for spec, P in stratum_samples():
        if gcd(*spec.mu) == 1:
            k = generic_degree(P, random.Random(spec.seed)).generic_degree
            r.equal(k, 1, f"generic degree of {spec.mu} n={spec.n} seed={spec.seed}")
    draws = 0
    for mu_tilde, k in NON_PROPER_CASES:
        for seed in range(NON_PROPER_SEEDS):
            P = sample_non_proper(mu_tilde, k, seed=seed, field=GF())
            draws += 1
            r.equal(mu_basis(P).mu, tuple(k * x for x in mu_tilde), f"type of {mu_tilde} o deg {k}")
            r.equal(generic_degree(P, random.Random(seed)).generic_degree, k, f"degree of {mu_tilde} o deg {k}")
    r.expect(draws >= 50, f"only {draws} non-proper draws")
    covered = {tuple(k * x for x in mt) for mt, k in NON_PROPER_CASES if k * sum(mt) == 12}
    listed = {mu for k in admissible_generic_degrees(12, 3) for mu in strata_admitting_degree(12, 3, k)}
    r.equal(covered, listed, "non-proper strata covered at (12,3)")
    return r


def _quadric(v, a):
    if v == 1:
        return a[0] * a[3] - a[1] * a[2]
    return a[0] * a[2] - a[1] * a[1]


def criterion_8() -> CheckResult:
    r = CheckResult("8", "ancestor ideals and scrolls")
    draws = kpu_samples()
    r.expect(len(draws) >= 50, f"only {len(draws)} KPU draws")
    for v, n, seed, P in draws:
        where = f"KPU{v} n={n} seed={seed}"
        dec = ancestor_ideal(P)
        r.equal(dec.tau, 2, f"{where} tau")
        r.equal(dec.scroll_partition, (2, 2) if v == 1 else (1, 3), f"{where} partition")
        r.expect(_quadric(v, P.forms).is_zero(), f"{where}: quadric identity fails")
        verdict = verify_scroll_containment(P, dec)
        r.expect(bool(verdict), f"{where}: {verdict.reason}")
        ancestor_hilbert(dec)
    for spec, P in stratum_samples():
        if P.c == 0:
            mu = mu_basis(P).mu
            dec = ancestor_ideal(P, mu)
            r.equal(dec.tau, P.d + 1 - mu.count(1), f"tau of {spec.mu} seed={spec.seed}")
    for n in range(4, 13):
        mu = (1, 1, n - 2)
        r.equal(substratum_dim(mu, (2, 2), n, 3), 2 * n + 12, f"substratum (2,2) n={n}")
        r.equal(substratum_dim(mu, (1, 3), n, 3), 2 * n + 11, f"substratum (1,3) n={n}")
    return r


def criterion_9() -> CheckResult:
    r = CheckResult("9", "integer identity sweeps")
    for d in range(2, 6):
        for n in range(d, 17):
            mu_min, mu_max = extremal_mu(n, d)
            types = enumerate_mu_types(n, d)
            if n >= d + 1:
                r.equal(stratum_dim(mu_min, n, d), d * d + d + 2 * n, f"dim mu_min ({n},{d})")
                r.equal(grass_codim(mu_min, n, d), (d - 1) * (n - d - 1), f"codim mu_min ({n},{d})")
            for mu in types:
                r.expect(mu_leq(mu_min, mu) and mu_leq(mu, mu_max), f"{mu} outside [mu_min, mu_max]")
            for k in admissible_generic_degrees(n, d):
                m = n // k
                for mu in strata_admitting_degree(n, d, k):
                    codim, bound = non_proper_codim(mu, k, n, d)
                    r.expect(codim >= bound > 0, f"bound at {mu}, k={k}")
                    mt = tuple(x // k for x in mu)
                    r.expect(s_statistic(mt) <= (m - d) * (d - 1), f"S bound at {mt}")
                    r.equal(stratum_dim(mu, n, d) - codim, non_proper_locus_dim(mu, k, n, d),
                            f"dimension bookkeeping at {mu}, k={k}")
    return r


def _sextic_kpu(v):
    return sample_kpu(v, 6, seed=11)


def worked_examples() -> CheckResult:
    """Worked examples not already covered by a numbered criterion."""
    r = CheckResult("E", "worked examples")
    Q = QQ
    s, t = BinaryForm.s(Q), BinaryForm.t(Q)
    # strata
    r.equal(stratum_dim((2, 3, 4), 9, 3), 39, "dim (2,3,4)")
    r.equal(stratum_dim((1, 1, 1), 6, 3), 19, "dim (1,1,1)")
    r.equal(stratum_dim((1, 1, 7), 9, 3), 30, "dim mu_min at (9,3)")
    r.equal(extremal_mu(9, 3), ((1, 1, 7), (3, 3, 3)), "extremal (9,3)")
    r.equal(extremal_mu(12, 5), ((1, 1, 1, 1, 8), (2, 2, 2, 3, 3)), "extremal (12,5)")
    for d in (2, 3, 4):
        lo, hi = extremal_mu(d + 1, d)
        r.expect(lo == hi, f"mu_min = mu_max at n = d+1 = {d + 1}")
    r.equal(grass_codim((1, 1, 7), 9, 3), 10, "codim (1,1,7)")
    r.equal(len(enumerate_mu_types(6, 3, True)), 7, "(6,3) strata with common factor")
    r.equal(len(enumerate_mu_types(12, 3)), 12, "(12,3) strata")
    r.expect(mu_leq((1, 1, 4), (1, 2, 3)) and mu_leq((1, 2, 3), (2, 2, 2)), "chain at (6,3)")
    r.equal(closure_set((2, 3, 4), 9, 3),
            sorted([(2, 3, 4), (2, 2, 5), (1, 4, 4), (1, 3, 5), (1, 2, 6), (1, 1, 7)]), "closure (2,3,4)")
    cl = closure_set((1, 2, 3), 6, 3, True)
    r.expect((1, 2, 2) in cl and (1, 1, 4) in cl, "closure of (1,2,3) with common factor")
    T = tail_hilbert_from_mu((1, 1, 4), 6, 3)
    r.equal(T.upto(10), [1, 2, 3, 4, 5, 6, 3, 2, 1, 0, 0], "T for (1,1,4)")
    for mu in enumerate_mu_types(9, 3, True):
        T = tail_hilbert_from_mu(mu, 9, 3)
        r.expect(T(9) == 6 and T.tail == 9 - sum(mu), f"T(n), tail for {mu}")
    # properness
    r.equal(admissible_generic_degrees(9, 3), [3], "(9,3) degrees")
    rnc = Parametrization((s ** 3, s * s * t, s * t * t, t ** 3))
    r.equal(generic_degree(rnc, 0).generic_degree, 1, "rational normal cubic proper")
    comp = compose_parametrization(rnc, s ** 3, t ** 3)
    r.equal(mu_basis(comp).mu, (3, 3, 3), "rnc o (s^3,t^3)")
    r.equal(mu_basis(compose_parametrization(rnc, s * s, t * t)).mu, (2, 2, 2), "rnc o (s^2,t^2)")
    r.equal(generic_degree(compose_parametrization(rnc, s * s, t * t), 0).generic_degree, 2,
            "generic degree of rnc o (s^2,t^2)")
    b = sample_in_stratum(SampleSpec((1, 1, 2), 4, 3, seed=5))
    alpha, beta = s ** 3 + t ** 3, s * t * (s - t)
    r.equal(mu_basis(compose_parametrization(b, alpha, beta)).mu, (3, 3, 6), "(1,1,2) o degree 3")
    # syzygies and mu-types
    r.equal(mu_type(_sextic_kpu(1)), ((1, 1, 4), 0), "KPU1 type")
    r.equal(mu_type(_sextic_kpu(2)), ((1, 1, 4), 0), "KPU2 type")
    r.equal(mu_type(sample_kpu(1, 4, seed=2))[0], (1, 1, 2), "KPU1 n=4 type")
    generic = Parametrization(tuple(BinaryForm.random(Q, 6, random.Random(i)) for i in range(4)))
    r.equal(mu_basis(generic).mu, (2, 2, 2), "random sextic")
    r.equal(mu_from_hilbert(_ideal_hilbert(_sextic_kpu(1)), 6, 3), (1, 1, 4), "KPU1 type from Hilbert")
    # ancestor ideals
    for v, A, rows in ((1, (2, 2), "S_{1,1}"), (2, (1, 3), "S_{0,2}")):
        P = _sextic_kpu(v)
        dec = ancestor_ideal(P)
        r.equal(dec.scroll_partition, A, f"KPU{v} partition")
        info = scroll_info(dec, 3)
        r.equal((info.name, info.scroll_degree, info.is_ambient), (rows, 2, False), f"KPU{v} scroll")
        r.expect(_quadric(v, P.forms).is_zero(), f"KPU{v} quadric")
    P = sample_in_stratum(SampleSpec((2, 2, 2), 6, 3, seed=3))
    dec = ancestor_ideal(P)
    r.equal((dec.tau, dec.scroll_partition), (4, (1, 1, 1, 1)), "generic sextic partition")
    r.expect(scroll_info(dec, 3).is_ambient, "generic sextic scroll is ambient")
    r.equal(substratum_closure((1, 1, 4), (2, 2)), [(1, 3), (2, 2)], "closure of (2,2)")
    r.equal(ancestor_order_equiv((1, 1, 4), (1, 3), (1, 1, 4), (2, 2), 6, 3), (True, True), "(1,3) vs (2,2)")
    # sampler
    P = sample_in_stratum(SampleSpec((1, 1, 1), 6, 3, seed=1))
    r.equal(mu_type(P), ((1, 1, 1), 3), "sample (1,1,1) at n=6")
    P = sample_non_proper((1, 1, 1), 3, seed=4)
    r.equal((P.n, mu_basis(P).mu, generic_degree(P, 4).generic_degree), (9, (3, 3, 3), 3), "non-proper (3,3,3)")
    return r


def _ideal_hilbert(P):
    from .syzygy import hilbert_of_ideal

    return hilbert_of_ideal(P)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, worked_examples)


def run_all():
    return [check() for check in CRITERIA]


def format_table(results) -> str:
    width = max(len(x.title) for x in results)
    lines = []
    for x in results:
        status = "PASS" if x.ok else "FAIL"
        lines.append(f"[{status}] {x.ident:>2}  {x.title:<{width}}  {x.detail}")
    passed = sum(x.ok for x in results)
    lines.append(f"{passed}/{len(results)} passed")
    return "\n".join(lines) + "\n"
