"""
환 위의 정확한 밀집(dense) 행렬.

DenseMatrix 는 불변 값 객체입니다. 모든 연산은 새 행렬을 돌려주며,
원소는 생성 시 지정한 환(rings.domains)의 원소입니다.
"""
from .exceptions import DimensionMismatch


class DenseMatrix:
    __slots__ = ('ring', 'rows', 'cols', '_entries')

    def __init__(self, ring, rows, cols, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f'negative shape {rows}x{cols}')
        if len(entries) != rows * cols:
            raise DimensionMismatch(f'{len(entries)} entries for a {rows}x{cols} matrix')
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._entries = entries

    # ---------- 생성자 ----------
    @classmethod
    def from_rows(cls, ring, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch('column count is required for a matrix without rows')
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f'ragged row of length {len(r)}, expected {cols}')
        return cls(ring, len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_ints(cls, ring, rows, cols=None):
        return cls.from_rows(ring, [[ring.from_int(v) for v in r] for r in rows], cols)

    @classmethod
    def zeros(cls, ring, rows, cols):
        return cls(ring, rows, cols, [ring.zero] * (rows * cols))

    @classmethod
    def identity(cls, ring, n):
        return cls.diagonal(ring, [ring.one] * n)

    @classmethod
    def diagonal(cls, ring, values, rows=None, cols=None):
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = rows if cols is None else cols
        if len(values) > min(rows, cols):
            raise DimensionMismatch(f'{len(values)} diagonal values for a {rows}x{cols} matrix')
        data = [[ring.zero] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls.from_rows(ring, data, cols)

    # ---------- 접근 ----------
    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f'entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix')
        return self._entries[i * self.cols + j]

    def row(self, i):
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self):
        return all(self.ring.is_zero(e) for e in self._entries)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.ring.name == other.ring.name and self.shape == other.shape
                and self._entries == other._entries)

    def __hash__(self):
        return hash((self.ring.name, self.rows, self.cols, self._entries))

    def __repr__(self):
        body = '; '.join(' '.join(self.ring.format(e) for e in self.row(i)) for i in range(self.rows))
        return f'DenseMatrix({self.ring.name}, {self.rows}x{self.cols}, [{body}])'

    # ---------- 산술 ----------
    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f'shapes {self.shape} and {other.shape} differ')

    def __add__(self, other):
        self._check_same_shape(other)
        return DenseMatrix(self.ring, self.rows, self.cols,
                           [a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return DenseMatrix(self.ring, self.rows, self.cols,
                           [a - b for a, b in zip(self._entries, other._entries)])

    def __neg__(self):
        return DenseMatrix(self.ring, self.rows, self.cols, [-a for a in self._entries])

    def scale(self, scalar):
        return DenseMatrix(self.ring, self.rows, self.cols, [scalar * a for a in self._entries])

    def multiply(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        ring = self.ring
        other_cols = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            left = self.row(i)
            for col in other_cols:
                acc = ring.zero
                for a, b in zip(left, col):
                    if not ring.is_zero(a) and not ring.is_zero(b):
                        acc = acc + a * b
                entries.append(acc)
        return DenseMatrix(ring, self.rows, other.cols, entries)

    __matmul__ = multiply

    def transpose(self):
        return DenseMatrix(self.ring, self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def block(self, row_start, row_stop, col_start, col_stop):
        return block_extract(self, row_start, row_stop, col_start, col_stop)

    def determinant(self):
        return determinant(self)

    def is_unimodular(self):
        return is_unimodular(self)


def multiply(lhs, rhs):
    return lhs.multiply(rhs)


def _cofactor_determinant(ring, m):
    n = len(m)
    if n == 0:
        return ring.one
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    det = ring.zero
    for j in range(n):
        if ring.is_zero(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _cofactor_determinant(ring, minor)
        det = det + term if j % 2 == 0 else det - term
    return det


def determinant(m):
    """분수 없는(Bareiss) 소거로 행렬식을 구합니다. n <= 3 은 여인수 전개."""
    if not m.is_square:
        raise DimensionMismatch(f'determinant of a non-square {m.rows}x{m.cols} matrix')
    ring = m.ring
    n = m.rows
    work = m.to_rows()
    if n <= 3:
        return _cofactor_determinant(ring, work)

    negate = False
    previous = ring.one
    for k in range(n - 1):
        if ring.is_zero(work[k][k]):
            swap = next((i for i in range(k + 1, n) if not ring.is_zero(work[i][k])), None)
            if swap is None:
                return ring.zero
            work[k], work[swap] = work[swap], work[k]
            negate = not negate
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss 단계의 나눗셈은 항상 정확히 떨어집니다
                work[i][j] = ring.exact_div(pivot * work[i][j] - work[i][k] * work[k][j], previous)
            work[i][k] = ring.zero
        previous = pivot
    det = work[n - 1][n - 1]
    return -det if negate else det


def is_unimodular(m):
    return m.ring.is_unit(determinant(m))


def block_extract(m, row_start, row_stop, col_start, col_stop):
    if not (0 <= row_start <= row_stop <= m.rows and 0 <= col_start <= col_stop <= m.cols):
        raise DimensionMismatch(
            f'block [{row_start}:{row_stop}, {col_start}:{col_stop}] outside a {m.rows}x{m.cols} matrix')
    return DenseMatrix(m.ring, row_stop - row_start, col_stop - col_start,
                       [m[i, j] for i in range(row_start, row_stop) for j in range(col_start, col_stop)])


def block_compose(layout):
    """
    블록 격자 [[B11, B12, ...], [B21, ...]] 를 하나의 행렬로 합칩니다.
    같은 격자 행의 블록은 행 수가, 같은 격자 열의 블록은 열 수가 같아야 하며
    0 크기 블록도 허용됩니다.
    """
    layout = [list(r) for r in layout]
    if not layout or not layout[0]:
        raise DimensionMismatch('empty block layout')
    width = len(layout[0])
    if any(len(r) != width for r in layout):
        raise DimensionMismatch('block rows have different lengths')
    ring = layout[0][0].ring
    heights = []
    for r, blocks in enumerate(layout):
        h = blocks[0].rows
        if any(b.rows != h for b in blocks):
            raise DimensionMismatch(f'block row {r} mixes heights {[b.rows for b in blocks]}')
        heights.append(h)
    widths = []
    for c in range(width):
        w = layout[0][c].cols
        if any(r[c].cols != w for r in layout):
            raise DimensionMismatch(f'block column {c} mixes widths {[r[c].cols for r in layout]}')
        widths.append(w)

    data = []
    for blocks, h in zip(layout, heights):
        for i in range(h):
            line = []
            for b in blocks:
                line.extend(b.row(i))
            data.append(line)
    return DenseMatrix.from_rows(ring, data, sum(widths))


def hstack(blocks):
    return block_compose([list(blocks)])


def vstack(blocks):
    return block_compose([[b] for b in blocks])
