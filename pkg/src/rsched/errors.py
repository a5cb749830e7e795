"""Exception types shared across the solver suite."""


class RschedError(Exception):
    """Base class for all rsched errors."""


class InvalidSizeError(RschedError):
    """A graph builder was given an unsupported size parameter."""


class InvalidRangeError(RschedError):
    """A subpath or index range was empty or out of bounds."""


class InvalidInstanceError(RschedError):
    """Instance construction failed; carries the list of violations."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class TopologyError(RschedError):
    """A solver was handed a graph of the wrong shape."""


class PreconditionError(RschedError):
    """An operation's input contract was violated."""


class UnknownTaskError(RschedError):
    """A schedule references a task vertex with no task on it."""


class MalformedScheduleError(RschedError):
    """Schedule segments do not chain, or use a non-edge move."""


class HorizonExhaustedError(RschedError):
    """The exhaustive search hit its timestep horizon without a solution."""

    def __init__(self, horizon):
        super().__init__(f"no task-completing set within horizon {horizon}")
        self.horizon = horizon


class StateBudgetExceededError(RschedError):
    """The exhaustive search exceeded its state budget."""


class PlanDeadlockError(RschedError):
    """Collision repair could not make progress on the planned walks."""


class RepairOverrunError(RschedError):
    """Collision repair pushed an equal-duration schedule past the DP bound."""
