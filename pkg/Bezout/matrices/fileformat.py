"""
행렬 파일 형식

    <rows> <cols>
    rows 개의 줄, 각 줄에 cols 개의 스칼라 리터럴 (공백 구분)

빈 줄과 '#' 으로 시작하는 주석 줄은 무시합니다.
"""
import re
from pathlib import Path

from rings.exceptions import ScalarParseError

from .exceptions import MatrixParseError
from .matrix import DenseMatrix

TOKEN = re.compile(r'\S+')
DIMENSION = re.compile(r'[0-9]+')


def _tokens(line):
    # (1-based column, token)
    return [(m.start() + 1, m.group()) for m in TOKEN.finditer(line)]


def parse_matrix(text, ring, source='<string>'):
    shape = None
    rows = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = _tokens(raw)

        # 1. 첫 유효 줄은 크기 헤더
        if shape is None:
            if len(tokens) != 2:
                column = tokens[2][0] if len(tokens) > 2 else len(raw) + 1
                raise MatrixParseError(source, line_no, column, 'header must be "<rows> <cols>"')
            for column, token in tokens:
                if not DIMENSION.fullmatch(token):
                    raise MatrixParseError(source, line_no, column, f'bad dimension {token!r}')
            shape = (int(tokens[0][1]), int(tokens[1][1]))
            continue

        # 2. 나머지는 행 데이터
        n_rows, n_cols = shape
        if len(rows) == n_rows or n_cols == 0:
            raise MatrixParseError(source, line_no, tokens[0][0], f'unexpected row beyond the declared {n_rows} rows')
        if len(tokens) != n_cols:
            column = tokens[n_cols][0] if len(tokens) > n_cols else len(raw) + 1
            raise MatrixParseError(source, line_no, column, f'expected {n_cols} entries, found {len(tokens)}')
        entries = []
        for column, token in tokens:
            try:
                entries.append(ring.parse(token))
            except ScalarParseError as e:
                raise MatrixParseError(source, line_no, column + e.column,
                                       f'{e} (ring {ring.name})') from e
        rows.append(entries)

    if shape is None:
        raise MatrixParseError(source, last_line + 1, 1, 'missing "<rows> <cols>" header')
    n_rows, n_cols = shape
    if n_cols == 0:
        rows = [[] for _ in range(n_rows)]
    if len(rows) != n_rows:
        raise MatrixParseError(source, last_line + 1, 1, f'expected {n_rows} rows, found {len(rows)}')
    return DenseMatrix.from_rows(ring, rows, n_cols)


def decode_text(data, source='<bytes>'):
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        # 잘못된 바이트의 위치를 (line, column) 으로 환산
        before = data[:e.start]
        line_start = before.rfind(b'\n') + 1
        column = len(before[line_start:].decode('utf-8', errors='replace')) + 1
        raise MatrixParseError(source, before.count(b'\n') + 1, column,
                               f'invalid UTF-8 byte 0x{data[e.start]:02x}') from e


def read_matrix(path, ring):
    path = Path(path)
    return parse_matrix(decode_text(path.read_bytes(), str(path)), ring, source=str(path))


def format_matrix(matrix):
    lines = [f'{matrix.rows} {matrix.cols}']
    if matrix.cols:
        for i in range(matrix.rows):
            lines.append(' '.join(matrix.ring.format(e) for e in matrix.row(i)))
    return '\n'.join(lines) + '\n'


def format_named(name, matrix):
    """'# name' 주석 헤더가 붙은 행렬 블록"""
    return f'# {name}\n' + format_matrix(matrix)


def write_matrix(path, matrix, header=None):
    text = format_named(header, matrix) if header else format_matrix(matrix)
    Path(path).write_text(text, encoding='utf-8')
