"""Shared instance builders for the test suite.

The fig_* helpers rebuild the small worked examples used by the golden
tests; the random_* helpers produce seeded instances at oracle-friendly
sizes.
"""
import random

import pytest

import rsched as R


def fig_general_instance():
    """9-vertex general graph with tasks on v2, v4, v5 and robots on v7, v9."""
    edges = [
        (4, 1), (4, 5), (1, 2), (2, 5), (2, 3), (6, 9),
        (5, 8), (8, 9), (6, 3), (6, 5), (8, 7), (4, 7),
    ]
    graph = R.build_general(9, edges)
    return R.make_instance(graph, [(4, 2), (5, 5), (2, 3)], [7, 9])


def fig_two_robot_instance():
    """P6, four tasks, robots on 5 and 6; best split gives makespan 6."""
    return R.make_instance(
        R.build_path(6), [(1, 1), (3, 1), (4, 1), (6, 2)], [5, 6]
    )


def fig_gap_instance():
    """P6 instance where the partition solver is off by one from optimal."""
    return R.make_instance(
        R.build_path(6), [(1, 1), (2, 1), (3, 4), (4, 1), (5, 1)], [3, 6]
    )


def fig_dp_instance():
    """P6, six unit-ish tasks, three robots; source of the golden DP table."""
    return R.make_instance(
        R.build_path(6),
        [(1, 2), (2, 1), (3, 1), (4, 2), (5, 1), (6, 1)],
        [1, 3, 6],
    )


GOLDEN_DP_ROWS = [
    [2, 4, 6, 9, 11, 13],
    [2, 2, 3, 4, 6, 7],
    [2, 2, 3, 4, 4, 4],
]


def example_schedule_sets():
    """The two hand-written schedule sets for the general-graph example."""
    first = R.ScheduleSet(schedules=(
        R.Schedule(robot=1, segments=(
            R.Walk(moves=((7, 8), (8, 5))),
            R.DoTask(vertex=5),
        )),
        R.Schedule(robot=2, segments=(
            R.Walk(moves=((9, 6), (6, 3), (3, 2))),
            R.DoTask(vertex=2),
            R.Walk(moves=((2, 1), (1, 4))),
            R.DoTask(vertex=4),
        )),
    ))
    second = R.ScheduleSet(schedules=(
        R.Schedule(robot=1, segments=(
            R.Walk(moves=((7, 4),)),
            R.DoTask(vertex=4),
            R.Walk(moves=((4, 1), (1, 2))),
            R.DoTask(vertex=2),
        )),
        R.Schedule(robot=2, segments=(
            R.Walk(moves=((9, 6), (6, 5))),
            R.DoTask(vertex=5),
        )),
    ))
    return first, second


def random_line_instance(rng, shape, n_max=8, k_max=3, m_max=5, equal=True, dmax=3):
    """Seeded random path or cycle instance at oracle scale."""
    n = rng.randint(3, n_max)
    graph = R.build_cycle(n) if shape == "cycle" else R.build_path(n)
    k = rng.randint(1, min(k_max, n - 1))
    m = rng.randint(1, min(m_max, n))
    if equal:
        d = rng.randint(1, dmax)
        tasks = [(v, d) for v in rng.sample(range(1, n + 1), m)]
    else:
        tasks = [(v, rng.randint(1, dmax)) for v in rng.sample(range(1, n + 1), m)]
    starts = rng.sample(range(1, n + 1), k)
    return R.make_instance(graph, tasks, starts)


def random_tadpole_instance(rng, total_max=8, k_max=3, m_max=4, dmax=3):
    """Seeded random equal-duration tadpole with cycle+path size capped."""
    cyc = rng.randint(3, total_max - 1)
    tail = rng.randint(1, total_max - cyc)
    graph = R.build_tadpole(cyc, tail)
    n = cyc + tail
    k = rng.randint(1, min(k_max, n - 1))
    m = rng.randint(1, min(m_max, n))
    d = rng.randint(1, dmax)
    tasks = [(v, d) for v in rng.sample(range(1, n + 1), m)]
    starts = rng.sample(range(1, n + 1), k)
    return R.make_instance(graph, tasks, starts)


@pytest.fixture
def rng():
    return random.Random(20240817)
