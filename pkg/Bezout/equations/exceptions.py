class SolverError(Exception):
    """행렬 방정식 풀이 오류의 공통 부모 클래스"""


class NotSolvable(SolverError):
    def __init__(self, cell=None):
        self.cell = cell
        detail = f' (divisibility fails at cell {cell})' if cell else ''
        super().__init__(f'the equation BX = A has no solution{detail}')


class InvariantViolation(SolverError, AssertionError):
    pass
