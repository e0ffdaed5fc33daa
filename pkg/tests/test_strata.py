import pytest
from hypothesis import given, strategies as hs

from mustrata.errors import HilbertShapeError, PartitionError
from mustrata.strata import (
    HilbertFunction,
    closure_set,
    enumerate_mu_types,
    extremal_mu,
    grass_codim,
    hasse_diagram,
    mu_from_hilbert,
    mu_leq,
    stratum_dim,
    tail_hilbert_from_mu,
)


class TestOrder:
    def test_incomparable_pair(self):
        assert not mu_leq((1, 4, 4), (2, 2, 5))
        assert not mu_leq((2, 2, 5), (1, 4, 4))

    def test_chain_at_six(self):
        assert mu_leq((1, 1, 4), (1, 2, 3)) and mu_leq((1, 2, 3), (2, 2, 2))

    def test_length_mismatch(self):
        with pytest.raises(PartitionError):
            mu_leq((1, 2), (1, 1, 1))

    @pytest.mark.parametrize("n,d", [(n, d) for d in range(2, 6) for n in range(d, 13)])
    def test_partial_order(self, n, d):
        types = enumerate_mu_types(n, d, True)
        for a in types:
            assert mu_leq(a, a)
            for b in types:
                if a != b and mu_leq(a, b) and sum(a) == sum(b):
                    assert not mu_leq(b, a)
                    assert stratum_dim(a, n, d) < stratum_dim(b, n, d)
        same = enumerate_mu_types(n, d)
        for a in same:
            for b in same:
                if mu_leq(a, b):
                    for c in same:
                        if mu_leq(b, c):
                            assert mu_leq(a, c)


class TestDimensions:
    @pytest.mark.parametrize("mu,n,want", [((1, 1, 4), 6, 24), ((2, 3, 4), 9, 39), ((1, 1, 1), 6, 19),
                                           ((2, 2, 2), 6, 28), ((1, 1, 7), 9, 30)])
    def test_stratum_dims(self, mu, n, want):
        assert stratum_dim(mu, n, 3) == want

    def test_out_of_range(self):
        with pytest.raises(PartitionError):
            stratum_dim((3, 3, 4), 9, 3)
        with pytest.raises(PartitionError):
            stratum_dim((2, 1, 3), 6, 3)

    def test_grass_codim(self):
        assert grass_codim((1, 1, 7), 9, 3) == 10
        assert grass_codim((3, 3, 3), 9, 3) == 0
        assert grass_codim((1, 1, 1), 6, 3) == 9 == 28 - 19

    @pytest.mark.parametrize("n,d", [(n, d) for d in range(2, 6) for n in range(d, 15)])
    def test_codim_matches_dim(self, n, d):
        full = (d + 1) * (n + 1)
        for mu in enumerate_mu_types(n, d, True):
            assert full - stratum_dim(mu, n, d) == grass_codim(mu, n, d)

    def test_extremal(self):
        assert extremal_mu(9, 3) == ((1, 1, 7), (3, 3, 3))
        assert extremal_mu(12, 5) == ((1, 1, 1, 1, 8), (2, 2, 2, 3, 3))
        assert extremal_mu(4, 4) == ((1, 1, 1, 1), (1, 1, 1, 1))

    @pytest.mark.parametrize("n,d", [(n, d) for d in range(2, 6) for n in range(d + 1, 15)])
    def test_mu_min_identities(self, n, d):
        lo, hi = extremal_mu(n, d)
        assert stratum_dim(lo, n, d) == d * d + d + 2 * n
        assert grass_codim(lo, n, d) == (d - 1) * (n - d - 1)
        assert grass_codim(hi, n, d) == 0
        assert all(mu_leq(lo, mu) and mu_leq(mu, hi) for mu in enumerate_mu_types(n, d))


class TestEnumeration:
    def test_counts(self):
        assert enumerate_mu_types(6, 3) == [(1, 1, 4), (1, 2, 3), (2, 2, 2)]
        assert len(enumerate_mu_types(6, 3, True)) == 7
        assert len(enumerate_mu_types(12, 3)) == 12

    def test_closures(self):
        assert closure_set((2, 3, 4), 9, 3) == sorted(
            [(2, 3, 4), (2, 2, 5), (1, 4, 4), (1, 3, 5), (1, 2, 6), (1, 1, 7)])
        with_cf = closure_set((1, 2, 3), 6, 3, True)
        assert (1, 2, 2) in with_cf and (1, 1, 4) in with_cf
        assert closure_set((1, 1, 7), 9, 3) == [(1, 1, 7)]

    @pytest.mark.parametrize("in_cp", [False, True])
    def test_closure_is_idempotent(self, in_cp):
        for mu in enumerate_mu_types(10, 3, in_cp):
            cl = closure_set(mu, 10, 3, in_cp)
            for x in cl:
                assert set(closure_set(x, 10, 3, in_cp)) <= set(cl)


class TestHasse:
    def test_nine_three(self):
        g = hasse_diagram(9, 3)
        assert [x.dim for x in g.nodes] == [40, 39, 36, 36, 35, 33, 30]
        assert sorted(g.covers_of((2, 3, 4))) == [(1, 4, 4), (2, 2, 5)]
        assert len(g.edges) == 7

    def test_six_three_common_factor(self):
        g = hasse_diagram(6, 3, True)
        assert [x.dim for x in g.nodes] == [28, 27, 25, 24, 23, 22, 19]
        assert sorted(g.covers_of((1, 2, 3))) == [(1, 1, 4), (1, 2, 2)]

    def test_six_three_chain(self):
        g = hasse_diagram(6, 3)
        assert g.edges == [((2, 2, 2), (1, 2, 3)), ((1, 2, 3), (1, 1, 4))]

    def test_dot_is_deterministic(self):
        dot = hasse_diagram(9, 3).to_dot()
        assert dot == hasse_diagram(9, 3).to_dot()
        assert '"(2,3,4)" [label="(2,3,4) dim=39"];' in dot
        assert '"(2,3,4)" -> "(1,4,4)";' in dot

    def test_json_and_text(self):
        g = hasse_diagram(6, 3)
        assert g.to_json()["nodes"][0] == {"mu": [2, 2, 2], "dim": 28, "codim": 0, "commonFactorDegree": 0}
        assert g.to_text().splitlines()[0] == "(2,2,2) dim=28  covers (1,2,3)"


class TestHilbert:
    def test_tail_function(self):
        T = tail_hilbert_from_mu((1, 1, 4), 6, 3)
        assert T.values == (1, 2, 3, 4, 5, 6, 3, 2, 1, 0)
        assert T(100) == 0 and T.stabilization_degree == 9

    @pytest.mark.parametrize("n,d", [(9, 3), (12, 3), (10, 4), (8, 2)])
    def test_round_trip(self, n, d):
        for mu in enumerate_mu_types(n, d, True):
            T = tail_hilbert_from_mu(mu, n, d)
            assert T(n) == n - d and T.tail == n - sum(mu)
            assert all(T(m) == m + 1 for m in range(n))
            assert mu_from_hilbert(T, n, d) == mu

    def test_malformed(self):
        with pytest.raises(HilbertShapeError):
            mu_from_hilbert(HilbertFunction((1, 2, 3, 4, 5, 6, 4, 0)), 6, 3)
        with pytest.raises(HilbertShapeError):
            mu_from_hilbert(HilbertFunction((1, 2, 0)), 6, 3)

    @pytest.mark.parametrize("n,d", [(9, 3), (8, 4), (11, 3)])
    def test_order_matches_hilbert(self, n, d):
        types = enumerate_mu_types(n, d)
        for a in types:
            for b in types:
                assert mu_leq(a, b) == (tail_hilbert_from_mu(a, n, d) >= tail_hilbert_from_mu(b, n, d))


@given(hs.integers(2, 5).flatmap(lambda d: hs.tuples(hs.just(d), hs.integers(d, 18))))
def test_hilbert_bijection_random_sizes(nd):
    d, n = nd
    for mu in enumerate_mu_types(n, d)[:20]:
        assert mu_from_hilbert(tail_hilbert_from_mu(mu, n, d), n, d) == mu
