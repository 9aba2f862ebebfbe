class OracleError(Exception):
    """독립 검증 도구 오류의 공통 부모 클래스"""


class TooLarge(OracleError):
    def __init__(self, states, ceiling):
        self.states = states
        self.ceiling = ceiling
        super().__init__(f'search space of {states} states exceeds the ceiling {ceiling}')


class UnsupportedRing(OracleError, ValueError):
    def __init__(self, ring):
        self.ring = ring
        super().__init__(f'operation is not available over {ring.name!r}')
