class MatrixError(Exception):
    """행렬 연산 오류의 공통 부모 클래스"""


class DimensionMismatch(MatrixError, ValueError):
    pass


class MatrixParseError(MatrixError, ValueError):
    """행렬 파일의 위치(line, column 모두 1-based)를 담는 파싱 오류"""

    def __init__(self, source, line, column, message):
        self.source = source
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f'{source}: line {line}, column {column}: {message}')
