"""Collision-free multi-robot scheduling on paths, cycles and tadpoles.

Solvers compute makespan-minimizing, task-completing, collision-free
schedule sets; an exhaustive search oracle provides ground truth at small
sizes; gadget generators turn partition and Hamiltonian-path questions
into scheduling instances.
"""
from .cyclesolve import CycleSolveResult, cycle_approximation_report, solve_cycle
from .errors import (
    HorizonExhaustedError,
    InvalidInstanceError,
    InvalidRangeError,
    InvalidSizeError,
    MalformedScheduleError,
    PlanDeadlockError,
    PreconditionError,
    RepairOverrunError,
    RschedError,
    StateBudgetExceededError,
    TopologyError,
    UnknownTaskError,
)
from .gadgets import (
    GadgetResult,
    ReductionVerdict,
    check_reduction,
    gadget_complete,
    gadget_planar,
    gadget_star,
    hamiltonian_path_from,
    partition_exists,
)
from .io import (
    instance_from_json,
    instance_to_json,
    load_instance,
    load_schedule_set,
    save_instance,
    save_schedule_set,
    schedule_set_from_json,
    schedule_set_to_json,
)
from .model import (
    GraphTopology,
    Instance,
    Robot,
    Task,
    build_cycle,
    build_general,
    build_path,
    build_tadpole,
    make_instance,
    subpath,
    validate_instance,
)
from .oracle import exact_optimum, feasible_within
from .pathsolve import (
    ApproximationReport,
    DPTable,
    PathSolveResult,
    TwoPartitionResult,
    approximation_report,
    blocks_from_table,
    k_partition_table,
    one_robot_plan,
    one_robot_span,
    solve_k_partition_dp,
    solve_one_robot,
    solve_two_robot_partition,
)
from .schedule import (
    DoTask,
    Schedule,
    ScheduleSet,
    Verdict,
    Walk,
    WalkRep,
    gantt,
    pad_to,
    schedule_span,
    time_span,
    validate_set,
    walk_representation,
)
from .tadpolesolve import TadpoleSolveResult, solve_tadpole
from .trees import SpiderSolveResult, solve_two_robot_spider

__all__ = [name for name in dir() if not name.startswith("_")]
