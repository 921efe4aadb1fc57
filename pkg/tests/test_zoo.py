from itertools import product

import pytest

from finsemi import (
    base_set,
    green,
    idempotents,
    is_clifford,
    is_completely_simple,
    is_conditionally_completely_regular,
    is_grillet_stratified,
    is_weakly_reductive,
    regular_elements,
    stratify,
    zoo,
)
from finsemi.errors import InvalidLinking, KTooLarge, LawViolation, OrderTooLarge


def brute_force_tables(n):
    """Filter-all-tables oracle, independent of the backtracking enumerator."""
    out = []
    for cells in product(range(n), repeat=n * n):
        rows = [cells[i * n:(i + 1) * n] for i in range(n)]
        if all(rows[rows[a][b]][c] == rows[a][rows[b][c]]
               for a in range(n) for b in range(n) for c in range(n)):
            out.append(tuple(rows))
    return out


class TestEnumerate:
    def test_order1(self):
        assert sum(1 for _ in zoo.enumerate_associative(1)) == 1

    def test_counts_against_oracle(self):
        for n in (2, 3):
            oracle = {t for t in brute_force_tables(n)}
            mine = {S._rows for S in zoo.enumerate_associative(n)}
            assert mine == oracle
        assert len(brute_force_tables(2)) == 8
        assert len(brute_force_tables(3)) == 113

    def test_dedup_counts(self):
        assert sum(1 for _ in zoo.enumerate_associative(2, dedup="iso+anti")) == 4
        assert sum(1 for _ in zoo.enumerate_associative(3, dedup="iso+anti")) == 18
        assert sum(1 for _ in zoo.enumerate_associative(3, dedup="iso")) == 24

    def test_order_cap(self):
        with pytest.raises(OrderTooLarge):
            next(zoo.enumerate_associative(5))


class TestMonogenic:
    @pytest.mark.parametrize("h", range(1, 7))
    @pytest.mark.parametrize("r", range(1, 7))
    def test_grid(self, h, r):
        rep = stratify(zoo.monogenic(h, r))
        assert rep.height == h
        assert len(rep.base) == r

    def test_cyclic_group(self):
        S = zoo.monogenic(1, 4)
        assert S.identity is not None
        assert stratify(S).height == 1

    def test_single_idempotent_kernel(self):
        S = zoo.monogenic(4, 1)
        assert stratify(S).base == {3}
        assert idempotents(S) == {3}


class TestClifford:
    def test_chain_fixture(self):
        C = zoo.clifford(zoo.CliffordData(
            zoo.chain_semilattice(2), (zoo.trivial(), zoo.cyclic_group(2)),
            {(1, 0): (0, 0)}))
        assert C.order == 3
        assert is_clifford(C) and is_weakly_reductive(C)

    def test_singleton_semilattice(self):
        C = zoo.clifford(zoo.CliffordData(zoo.chain_semilattice(1),
                                          (zoo.cyclic_group(3),), {}))
        assert C == zoo.cyclic_group(3)

    def test_bowtie_three_groups(self):
        from finsemi import rho_partition, from_table
        bowtie = from_table(3, [[0, 0, 0], [0, 1, 0], [0, 0, 2]])
        C = zoo.clifford(zoo.CliffordData(
            bowtie, (zoo.cyclic_group(2),) * 3,
            {(1, 0): (0, 1), (2, 0): (0, 1)}))
        assert C.order == 6
        assert is_clifford(C)
        assert len(rho_partition(C)) == 3

    def test_invalid_linking_rejected(self):
        with pytest.raises(InvalidLinking):
            zoo.clifford(zoo.CliffordData(
                zoo.chain_semilattice(2),
                (zoo.cyclic_group(2), zoo.cyclic_group(2)),
                {(1, 0): (0, 0)}))  # g -> g is fine, e -> g is not a hom

    def test_non_group_part_rejected(self):
        with pytest.raises(InvalidLinking):
            zoo.clifford(zoo.CliffordData(
                zoo.chain_semilattice(2),
                (zoo.trivial(), zoo.zero_semigroup(2)), {(1, 0): (0, 0)}))


class TestAbsorptionSum:
    def test_t_in_base(self):
        S = zoo.absorption_sum(zoo.zero_semigroup(2), zoo.trivial())
        assert S.order == 3
        assert 2 in base_set(S)

    def test_two_trivials(self):
        S = zoo.absorption_sum(zoo.trivial(), zoo.trivial())
        assert {1} <= base_set(S)

    def test_monogenic_over_group(self):
        S = zoo.absorption_sum(zoo.monogenic(2, 1), zoo.cyclic_group(2))
        assert {2, 3} <= base_set(S)


class TestPowersetNil:
    def test_k1_is_null(self, n2):
        from finsemi import isomorphic
        assert isomorphic(zoo.powerset_nilsemigroup(1), n2)

    def test_k2(self):
        S = zoo.powerset_nilsemigroup(2)
        from finsemi import power_set
        assert power_set(S, 3) == {0}
        assert stratify(S).height == 3

    def test_k3_strata(self):
        from finsemi import power_set
        S = zoo.powerset_nilsemigroup(3)
        # S^m = {A : |A| >= m} ∪ {∅}, so the height is 4
        for m in (2, 3):
            expected = {a for a in range(8) if bin(a).count("1") >= m} | {0}
            assert power_set(S, m) == expected
        assert stratify(S).height == 4
        for a in range(1, 8):
            assert S.mul(a, a) == 0   # every element nilpotent of index 2

    def test_cap(self):
        with pytest.raises(KTooLarge):
            zoo.powerset_nilsemigroup(6)


class TestOtherFixtures:
    def test_brandt_not_ccr(self):
        assert not is_conditionally_completely_regular(zoo.brandt_b2())

    def test_rectangular_band(self):
        S = zoo.rectangular_band(2, 2)
        assert is_completely_simple(S)
        assert base_set(S) == set(S.elements)

    def test_free_nilpotent(self):
        S = zoo.free_nilpotent(2, 3)
        assert S.order == 7
        assert is_grillet_stratified(S)
        assert stratify(S).height == 3

    def test_free_nilpotent_cap(self):
        with pytest.raises(OrderTooLarge):
            zoo.free_nilpotent(3, 6)

    def test_zero_semigroup(self):
        S = zoo.zero_semigroup(3)
        assert S.zero == 0
        assert not is_weakly_reductive(S)

    def test_full_transformations_order(self):
        assert zoo.full_transformations(2).order == 4
        assert zoo.full_transformations(3).order == 27
        with pytest.raises(OrderTooLarge):
            zoo.full_transformations(4)


class TestPartialMapExtension:
    def test_degenerate_m1(self):
        w = zoo.partial_map_extension(2, 1, [zoo.cyclic_group(2)] * 2)
        # with m = 1 every defined value is already the cap, so T = {0}
        assert w.sigma.order == len(w.ideal)

    def test_n1_m2_components(self):
        from finsemi import clifford_decompose
        w = zoo.partial_map_extension(1, 2, [zoo.cyclic_group(2)], picks=[0])
        dec = clifford_decompose(w.sigma, w.ideal)
        assert len(dec.components) == 2    # one per subset of {1}

    def test_n2_m2_components(self):
        from finsemi import clifford_decompose
        w = zoo.partial_map_extension(2, 2, [zoo.cyclic_group(2)] * 2,
                                      picks=[0, 0])
        assert len(clifford_decompose(w.sigma, w.ideal).components) == 4

    def test_nontrivial_picks_can_violate_the_law(self):
        with pytest.raises(LawViolation):
            zoo.partial_map_extension(2, 3, [zoo.cyclic_group(2)] * 2,
                                      picks=[0, 0])

    def test_identity_picks_always_valid(self):
        for n in (1, 2):
            for m in (1, 2, 3):
                w = zoo.partial_map_extension(n, m, [zoo.cyclic_group(2)] * n)
                assert w.sigma.order == len(w.ideal) + (m + 1) ** n - _ideal_size(n, m)

    def test_order_cap(self):
        with pytest.raises(OrderTooLarge):
            zoo.partial_map_extension(3, 3, [zoo.cyclic_group(3)] * 3)


def _ideal_size(n, m):
    return sum(1 for f in product(range(m + 1), repeat=n)
               if all(v in (0, m) for v in f))


class TestSamplers:
    def test_sample_deterministic(self):
        a = zoo.sample_associative(4, 300, seed=7)
        b = zoo.sample_associative(4, 300, seed=7)
        assert [S._rows for S in a] == [S._rows for S in b]

    def test_sample_filters(self):
        # at order 2 uniform sampling actually yields hits: 8/16 tables
        hits = zoo.sample_associative(2, 200, seed=1)
        assert hits and all(S.order == 2 for S in hits)

    def test_random_associative_deterministic(self):
        a = zoo.random_associative(5, 4, seed=3)
        b = zoo.random_associative(5, 4, seed=3)
        assert [S._rows for S in a] == [S._rows for S in b]
        assert len(a) == 4


def test_every_fixture_validates():
    fixtures = [
        zoo.trivial(), zoo.monogenic(3, 2), zoo.cyclic_group(4),
        zoo.zero_semigroup(3), zoo.chain_semilattice(3),
        zoo.rectangular_band(2, 3), zoo.brandt_b2(),
        zoo.full_transformations(2), zoo.powerset_nilsemigroup(3),
        zoo.free_nilpotent(2, 4), zoo.absorption_sum(zoo.trivial(), zoo.trivial()),
    ]
    for S in fixtures:
        assert S.order >= 1   # construction already re-validated associativity
