class DPColorError(RuntimeError):
    exit_code: int = 4


# input and precondition failures, exit code 1


class InputError(DPColorError):
    exit_code = 1


class GraphFileError(InputError):
    pass


class InconsistentRotation(InputError):
    pass


class EulerViolation(InputError):
    pass


class AmbiguousOuterFace(InputError):
    pass


class BoundaryNotCycle(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class NotATree(InputError):
    pass


class InvalidPartialColoring(InputError):
    pass


class UnsupportedKind(InputError):
    pass


# unsatisfiable instances, exit code 2


class OuterExtensionUnsat(DPColorError):
    exit_code = 2


# budgets, exit code 3


class BudgetExceeded(DPColorError):
    exit_code = 3


class SolverTooLarge(BudgetExceeded):
    pass


class GenerationStalled(BudgetExceeded):
    pass


# internal inconsistencies, exit code 4


class LemmaViolated(DPColorError):
    pass


class MatchingCollision(DPColorError):
    pass


class EulerMismatch(DPColorError):
    pass


class InsufficientSlack(DPColorError):
    def __init__(self, vertex: int, slack: int, needed: int) -> None:
        super().__init__(
            f"vertex {vertex} has slack {slack} but needs {needed} colors"
        )
        self.vertex = vertex
        self.slack = slack
        self.needed = needed
