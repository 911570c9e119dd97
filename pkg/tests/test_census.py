import pytest

from egstab.errors import PreconditionError
from egstab.extremal.bounds import erdos_gallai_cycle_bound, kopylov_bound
from egstab.verifier.census import (census_corollary_3conn, census_erdos_gallai_cycle,
                                    census_erdos_hamiltonicity, census_kopylov, census_stability,
                                    check_chvatal, run_census)


class TestErdosGallai:
    def test_block_chain_case(self):
        rep = census_erdos_gallai_cycle(7, 4)
        assert rep.confirmed
        assert rep.maxima["max_edges"] == erdos_gallai_cycle_bound(7, 4) == 9
        assert rep.flags == {"block_chain_attains": True, "bound_integral": True}

    def test_fractional_bound(self):
        rep = census_erdos_gallai_cycle(8, 4)
        assert rep.confirmed and not rep.flags["bound_integral"]
        assert rep.maxima["max_edges"] < erdos_gallai_cycle_bound(8, 4)

    def test_range(self):
        with pytest.raises(PreconditionError):
            census_erdos_gallai_cycle(10, 4)


class TestKopylov:
    @pytest.mark.parametrize("n, k", [(7, 5), (8, 6), (8, 8), (9, 7)])
    def test_small(self, n, k):
        rep = census_kopylov(n, k)
        assert rep.confirmed and rep.maxima["bound"] == kopylov_bound(n, k)
        assert rep.tallies.get("equality", 0) >= 1


class TestStability:
    def test_n9(self):
        rep = census_stability(9, 9)
        assert rep.confirmed
        assert rep.tallies["InClassWithWitness:G1t"] == 3
        assert rep.tallies["SubgraphH2:G1two"] == 1

    def test_corollary(self):
        rep = census_corollary_3conn(9, 9)
        assert rep.confirmed and rep.tallies == {"SubgraphHt": 3}

    def test_range(self):
        with pytest.raises(PreconditionError):
            census_stability(11, 9)


class TestHamiltonicity:
    @pytest.mark.parametrize("n, d", [(5, 2), (7, 3), (8, 2)])
    def test_small(self, n, d):
        rep = census_erdos_hamiltonicity(n, d)
        assert rep.confirmed and rep.flags["non_hamiltonian_at_threshold"]

    def test_chvatal(self):
        rep = check_chvatal(7)
        assert rep.confirmed and rep.scanned == 1044


class TestDeterminism:
    def test_shards_and_workers(self):
        a = census_kopylov(8, 7).to_dict(timing=False)
        b = census_kopylov(8, 7, shards=3).to_dict(timing=False)
        c = census_kopylov(8, 7, workers=2).to_dict(timing=False)
        assert a == b == c

    def test_bad_workers(self):
        with pytest.raises(PreconditionError):
            run_census("chvatal", {"n": 5}, workers=0)
