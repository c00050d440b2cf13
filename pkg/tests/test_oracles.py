import random

import pytest

from dbcompare.catalog import generate_instances
from dbcompare.oracles import (McEstimate, naive_nondominated,
                               simulate_hk_distance, simulate_hk_mafia,
                               simulate_random_answer)
from dbcompare.pareto import nondominated

TRIALS = 200_000   # unit-test budget; the acceptance suite runs 10^6


def test_oracle_singleton():
    pool = generate_instances(["BC"])[:1]
    assert naive_nondominated(pool).ids() == ["BC-{1}"]


def test_oracle_pairwise_example():
    pool = [i for i in generate_instances(["BC", "MAD"])
            if i.id in ("BC-{16}", "MAD-{16}")]
    assert naive_nondominated(pool).ids() == ["BC-{16}"]


def test_oracle_cap():
    pool = generate_instances(["Tree"])
    with pytest.raises(ValueError, match="cap"):
        naive_nondominated(pool, cap=5000)


def test_oracle_matches_engine_on_random_subsets():
    instances = generate_instances()
    rng = random.Random(11)
    for _ in range(3):
        sample = rng.sample(instances, 400)
        assert naive_nondominated(sample).ids() == nondominated(sample).ids()


def test_random_answer_degenerate():
    est = simulate_random_answer(0, trials=1000, seed=1)
    assert est.mean == 1.0 and est.stderr == 0.0


def test_random_answer_single_round():
    est = simulate_random_answer(1, trials=TRIALS, seed=2)
    assert est.within(0.5)


def test_random_answer_eight_rounds():
    est = simulate_random_answer(8, trials=TRIALS, seed=3)
    assert est.within(0.5 ** 8)


def test_preask_single_round():
    est = simulate_hk_mafia(1, trials=TRIALS, seed=4)
    assert est.within(0.75)


def test_preask_four_rounds():
    est = simulate_hk_mafia(4, trials=TRIALS, seed=5)
    assert est.within(0.75 ** 4)      # ~0.3164


def test_early_reply_rounds():
    assert simulate_hk_distance(1, trials=TRIALS, seed=6).within(0.75)
    assert simulate_hk_distance(3, trials=TRIALS, seed=7).within(0.75 ** 3)


def test_early_reply_degenerate_registers():
    est = simulate_hk_distance(5, trials=2000, seed=8,
                               force_equal_registers=True)
    assert est.mean == 1.0


def test_seeded_determinism():
    a = simulate_hk_mafia(6, trials=50_000, seed=99)
    b = simulate_hk_mafia(6, trials=50_000, seed=99)
    assert a == b
    c = simulate_hk_mafia(6, trials=50_000, seed=100)
    assert a.mean != c.mean or a.seed != c.seed


def test_estimate_invariant():
    est = simulate_random_answer(2, trials=40_000, seed=12)
    expected_se = (est.mean * (1 - est.mean) / est.trials) ** 0.5
    assert est.stderr == pytest.approx(expected_se)
    assert est.rng == "pcg64"
    assert isinstance(est, McEstimate)
