class RingError(Exception):
    """환 연산 오류의 공통 부모 클래스"""


class NotDivisible(RingError):
    def __init__(self, dividend, divisor):
        self.dividend = dividend
        self.divisor = divisor
        super().__init__(f'{divisor} does not divide {dividend}')


class DivisionByZero(RingError, ZeroDivisionError):
    def __init__(self, dividend):
        self.dividend = dividend
        super().__init__(f'division of {dividend} by zero')


class ScalarParseError(RingError, ValueError):
    # column은 리터럴 내부의 0-based 위치
    def __init__(self, literal, message, column=0):
        self.literal = literal
        self.column = column
        super().__init__(f'{message}: {literal!r}')
