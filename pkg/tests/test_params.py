import math

import pytest

from dirhopset.params import MODE_PAPER, MODE_PRACTICAL, derive_params
from dirhopset.parallel import derive_parallel_params


class TestPaperMode:
    def test_rho_values_n1024(self):
        p = derive_params(1024, 1.0, k=2, lam=8, mode=MODE_PAPER)
        # 16*64*4*100 - 1 and 32*64*4*100
        assert p.rho_min == 409599.0
        assert p.rho_max == 819200.0
        assert p.interval_count == 51200
        assert p.interval_width == 8

    def test_L_for_eps_one(self):
        p = derive_params(1024, 1.0, k=2, lam=8, mode=MODE_PAPER)
        assert p.L == 15

    def test_L_shrinks_with_eps(self):
        small = derive_params(1024, 0.25, k=2, lam=8, mode=MODE_PAPER)
        assert small.L == 19  # 15 - 2*log2(0.25)

    def test_kc_formula(self):
        p = derive_params(1024, 1.0, k=2, lam=8, mode=MODE_PAPER)
        want = (8 ** 15) * (2 ** 7.0) / (32.0 * 1000.0)
        assert math.isclose(p.k ** p.c, want, rel_tol=1e-9)

    def test_repetitions(self):
        p = derive_params(1024, 1.0, k=2, lam=8, mode=MODE_PAPER)
        assert p.repetitions == 80

    def test_span_invariant(self):
        for n in (100, 1024, 5000):
            p = derive_params(n, 0.5, k=2, lam=8, mode=MODE_PAPER)
            span = p.rho_max - (p.rho_min + 1)
            assert abs(span - p.interval_count * p.interval_width) < 1e-9

    def test_max_level(self):
        p = derive_params(1024, 1.0, k=2, lam=8, mode=MODE_PAPER)
        assert p.max_level == 10
        assert derive_params(1000, 1.0, k=2, lam=8).max_level == 10


class TestPracticalMode:
    def test_defaults_accepted(self):
        p = derive_params(64, 0.5, k=2, lam=1, mode=MODE_PRACTICAL)
        assert p.rho_min == 3.0 and p.rho_max == 8.0
        assert p.interval_count == 2 and p.interval_width == 2

    def test_overrides(self):
        p = derive_params(64, 0.5, k=2, lam=1, mode=MODE_PRACTICAL,
                          L=0, c=2.0, rho_min=2.0, interval_count=3,
                          interval_width=4)
        assert p.L == 0 and p.c == 2.0
        assert p.rho_max == 2.0 + 1.0 + 12.0

    def test_rejects_bad_rho_order(self):
        with pytest.raises(ValueError):
            derive_params(64, 0.5, k=2, lam=1, mode=MODE_PRACTICAL,
                          rho_min=9.0, rho_max=4.0)

    def test_rejects_narrow_width(self):
        with pytest.raises(ValueError):
            derive_params(64, 0.5, k=2, lam=1, mode=MODE_PRACTICAL,
                          interval_width=1)

    def test_rejects_span_mismatch(self):
        with pytest.raises(ValueError):
            derive_params(64, 0.5, k=2, lam=1, mode=MODE_PRACTICAL,
                          rho_min=3.0, rho_max=100.0)

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            derive_params(64, 0.5, k=1, lam=1, mode=MODE_PRACTICAL)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            derive_params(64, 0.5, mode="turbo")


class TestParallelParams:
    def test_delta(self):
        delta, eps_inner, _, _ = derive_parallel_params(1024, 0.8)
        assert math.isclose(delta, 0.01)
        assert math.isclose(eps_inner, 0.01)

    def test_L(self):
        _, _, L, _ = derive_parallel_params(1024, 1.0, k=2)
        assert L == 17

    def test_beta(self):
        _, _, _, beta = derive_parallel_params(1024, 1.0, k=2, lam=8)
        assert math.isclose(beta, 6.0 * (8 ** 10) * 32.0 / 10.0)

    def test_rejects_zero_eps(self):
        with pytest.raises(ValueError):
            derive_parallel_params(1024, 0.0)
