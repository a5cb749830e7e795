import random

import pytest

import rsched as R


def test_four_cycle_two_robots():
    inst = R.make_instance(R.build_cycle(4), [(1, 1), (3, 1)], [2, 4])
    res = R.solve_cycle(inst)
    assert res.makespan == 2
    assert res.removed_edge == (1, 2)
    assert res.optimal_claimed
    assert R.validate_set(res.schedule_set, inst).valid


def test_single_robot_wraps_the_short_way():
    inst = R.make_instance(R.build_cycle(6), [(2, 1), (6, 1)], [1])
    res = R.solve_cycle(inst)
    assert res.makespan == R.exact_optimum(inst)[0]
    assert R.validate_set(res.schedule_set, inst).valid


def test_rejects_non_cycle():
    inst = R.make_instance(R.build_path(4), [(2, 1)], [1])
    with pytest.raises(R.TopologyError):
        R.solve_cycle(inst)


def test_unequal_durations_not_claimed_optimal():
    inst = R.make_instance(R.build_cycle(5), [(2, 1), (4, 3)], [1])
    res = R.solve_cycle(inst)
    assert not res.optimal_claimed
    assert R.validate_set(res.schedule_set, inst).valid


def test_deterministic_cut_choice():
    inst = R.make_instance(R.build_cycle(6), [(1, 2), (4, 2)], [2, 5])
    a = R.solve_cycle(inst)
    b = R.solve_cycle(inst)
    assert a.removed_edge == b.removed_edge
    assert a.schedule_set == b.schedule_set


def test_equal_durations_match_oracle_batch():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(3, 7)
        k = rng.randint(1, min(3, n - 1))
        m = rng.randint(1, min(4, n))
        d = rng.randint(1, 3)
        tasks = [(v, d) for v in rng.sample(range(1, n + 1), m)]
        inst = R.make_instance(
            R.build_cycle(n), tasks, rng.sample(range(1, n + 1), k)
        )
        res = R.solve_cycle(inst)
        assert res.makespan == R.exact_optimum(inst)[0]
        verdict = R.validate_set(res.schedule_set, inst)
        assert verdict.valid, verdict.violations


def test_cycle_approximation_report_bound_is_k():
    inst = R.make_instance(R.build_cycle(5), [(2, 2), (4, 5)], [1, 3])
    rep = R.cycle_approximation_report(inst)
    assert rep.bound == 2
    assert rep.ratio <= rep.bound
