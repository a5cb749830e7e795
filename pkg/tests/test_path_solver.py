import random

import pytest

import rsched as R
from conftest import (
    GOLDEN_DP_ROWS,
    fig_dp_instance,
    fig_gap_instance,
    fig_two_robot_instance,
)


def test_one_robot_span_basic():
    assert R.one_robot_span([(2, 1), (5, 2)], 1) == 1 + 3 + 3
    assert R.one_robot_span([(2, 1), (5, 2)], 6) == 1 + 3 + 3
    assert R.one_robot_span([], 4) == 0


def test_one_robot_span_start_inside():
    # start between extremes: go to the nearer extreme first
    assert R.one_robot_span([(1, 1), (6, 1)], 2) == 1 + 5 + 2


def test_one_robot_span_requires_sorted():
    with pytest.raises(R.PreconditionError):
        R.one_robot_span([(5, 1), (2, 1)], 1)


def test_solve_one_robot_matches_closed_form():
    path = R.build_path(6)
    tasks = [(2, 2), (4, 1), (6, 3)]
    sched = R.solve_one_robot(path, tasks, 3)
    inst = R.make_instance(path, tasks, [3])
    assert R.schedule_span(sched, inst) == R.one_robot_span(tasks, 3)
    verdict = R.validate_set(R.ScheduleSet(schedules=(sched,)), inst)
    assert verdict.valid


def test_one_robot_randomized_agreement():
    rng = random.Random(7)
    path = R.build_path(12)
    for _ in range(200):
        m = rng.randint(1, 6)
        tasks = sorted((v, rng.randint(1, 4)) for v in rng.sample(range(1, 13), m))
        start = rng.randint(1, 12)
        sched = R.solve_one_robot(path, tasks, start)
        inst = R.make_instance(path, tasks, [start])
        assert R.schedule_span(sched, inst) == R.one_robot_span(tasks, start)


def test_golden_dp_table():
    res = R.solve_k_partition_dp(fig_dp_instance())
    assert res.table.rows() == GOLDEN_DP_ROWS
    assert res.table.final() == 4
    assert res.makespan == 4
    assert res.optimal_claimed is False  # durations are mixed here


def test_dp_csv_shape():
    res = R.solve_k_partition_dp(fig_dp_instance())
    lines = res.table.to_csv().splitlines()
    assert lines[0] == "c\\l,1,2,3,4,5,6"
    assert lines[3] == "3,2,2,3,4,4,4"


def test_blocks_cover_all_tasks():
    res = R.solve_k_partition_dp(fig_dp_instance())
    blocks = R.blocks_from_table(res.table)
    covered = []
    for lo, hi in blocks:
        if lo >= 1:
            covered.extend(range(lo, hi + 1))
    assert sorted(covered) == [1, 2, 3, 4, 5, 6]


def test_two_robot_candidates():
    res = R.solve_two_robot_partition(fig_two_robot_instance())
    by_q = {q: (sl, sr) for q, sl, sr in res.candidates}
    assert by_q[1] == (5, 7)
    assert by_q[2] == (6, 5)
    assert by_q[3] == (7, 2)
    assert res.split == 2
    assert res.makespan == 6


def test_two_robot_requires_k2():
    inst = R.make_instance(R.build_path(4), [(1, 1)], [2])
    with pytest.raises(R.PreconditionError):
        R.solve_two_robot_partition(inst)


def test_gap_instance_dp_value():
    res = R.solve_two_robot_partition(fig_gap_instance())
    assert res.makespan == 8
    assert R.validate_set(res.schedule_set, fig_gap_instance()).valid


def test_equal_duration_head_on_repair():
    # robots start on the wrong sides; joint execution must wait/push
    inst = R.make_instance(R.build_path(5), [(1, 1), (5, 1)], [3, 4])
    res = R.solve_k_partition_dp(inst)
    assert res.optimal_claimed
    verdict = R.validate_set(res.schedule_set, inst)
    assert verdict.valid
    assert res.makespan == R.exact_optimum(inst)[0]


def test_solver_output_always_validates():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 9)
        k = rng.randint(1, min(3, n - 1))
        m = rng.randint(1, min(5, n))
        tasks = [(v, rng.randint(1, 4)) for v in rng.sample(range(1, n + 1), m)]
        inst = R.make_instance(
            R.build_path(n), tasks, rng.sample(range(1, n + 1), k)
        )
        res = R.solve_k_partition_dp(inst)
        verdict = R.validate_set(res.schedule_set, inst)
        assert verdict.valid, verdict.violations
        assert verdict.span == res.makespan


def test_rejects_non_path():
    inst = R.make_instance(R.build_cycle(4), [(2, 1)], [1])
    with pytest.raises(R.TopologyError):
        R.solve_k_partition_dp(inst)


def test_approximation_report_fields():
    rep = R.approximation_report(fig_gap_instance())
    assert rep.solver_span == 8
    assert rep.oracle_span == 7
    assert rep.bound == 2
    assert rep.ratio == pytest.approx(8 / 7)
