class DecompositionError(Exception):
    """정규형 계산 오류의 공통 부모 클래스"""


class SmithInvariantError(DecompositionError, AssertionError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__('Smith decomposition invariants violated: ' + '; '.join(self.violations))
