"""
Smith 정규형과 네 개의 변환행렬 (P, Pinv, Q, Qinv).

    P * A * Q = E = diag(e_1, ..., e_r, 0, ..., 0),   e_i | e_(i+1)

즉 A = Pinv * E * Qinv 입니다.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from matrices.matrix import DenseMatrix

from .elimination import EliminationBuffer
from .exceptions import SmithInvariantError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    P: DenseMatrix
    Pinv: DenseMatrix
    inv_factors: Tuple
    Q: DenseMatrix
    Qinv: DenseMatrix
    rank: int

    @property
    def ring(self):
        return self.P.ring

    @property
    def shape(self):
        return self.P.rows, self.Q.rows

    @property
    def E(self):
        rows, cols = self.shape
        return DenseMatrix.diagonal(self.ring, self.inv_factors, rows, cols)

    def violations(self, source):
        """깨진 불변식 목록 (비어 있으면 정상)"""
        ring = self.ring
        rows, cols = self.shape
        problems = []
        if self.P.multiply(source).multiply(self.Q) != self.E:
            problems.append('P*A*Q != E')
        if self.P.multiply(self.Pinv) != DenseMatrix.identity(ring, rows):
            problems.append('P*Pinv != I')
        if self.Q.multiply(self.Qinv) != DenseMatrix.identity(ring, cols):
            problems.append('Q*Qinv != I')
        if len(self.inv_factors) != self.rank:
            problems.append('rank does not match the factor count')
        for i, e in enumerate(self.inv_factors):
            if ring.is_zero(e) or ring.canonical(e) != e:
                problems.append(f'factor {i + 1} is zero or not canonical')
        for i in range(len(self.inv_factors) - 1):
            if not ring.divides(self.inv_factors[i], self.inv_factors[i + 1]):
                problems.append(f'factor {i + 1} does not divide factor {i + 2}')
        return problems

    def check(self, source):
        problems = self.violations(source)
        if problems:
            raise SmithInvariantError(problems)
        return self


def _pick_pivot(buffer, s):
    # 가장 작은 0 이 아닌 원소, 같으면 (행, 열) 이 작은 쪽
    ring = buffer.ring
    best = None
    for i in range(s, buffer.m):
        for j in range(s, buffer.n):
            if buffer.is_zero(i, j):
                continue
            key = (ring.pivot_key(buffer.M[i][j]), i, j)
            if best is None or key < best:
                best = key
    return None if best is None else best[1:]


def _non_divisible_row(buffer, s):
    ring = buffer.ring
    pivot = buffer.M[s][s]
    for i in range(s + 1, buffer.m):
        for j in range(s + 1, buffer.n):
            if not ring.divides(pivot, buffer.M[i][j]):
                return i
    return None


def _diagonalize(buffer):
    s = 0
    limit = min(buffer.m, buffer.n)
    while s < limit:
        position = _pick_pivot(buffer, s)
        if position is None:
            break
        i, j = position
        if i != s:
            buffer.swap_rows(s, i)
        if j != s:
            buffer.swap_cols(s, j)

        while True:
            # 1. 피벗 아래 열을 행 연산으로 소거
            for i in range(s + 1, buffer.m):
                buffer.clear_below(s, i)
            # 2. 피벗 오른쪽 행을 열 연산으로 소거 (열 s 가 다시 채워질 수 있음)
            for j in range(s + 1, buffer.n):
                buffer.clear_right(s, j)
            if any(not buffer.is_zero(i, s) for i in range(s + 1, buffer.m)):
                continue
            # 3. 피벗이 나머지 블록을 모두 나누도록 보정
            bad = _non_divisible_row(buffer, s)
            if bad is None:
                break
            buffer.combine_rows(s, bad, buffer.ring.one, buffer.ring.one,
                                buffer.ring.zero, buffer.ring.one)
        s += 1

    # 4. 대각 원소를 정규 대표원으로 (단위는 P 쪽으로 흡수)
    ring = buffer.ring
    for k in range(s):
        _, unit = ring.normalize(buffer.M[k][k])
        if unit != ring.one:
            buffer.scale_row(k, ring.unit_inverse(unit))
    return [buffer.M[k][k] for k in range(s)]


def smith(matrix):
    buffer = EliminationBuffer(matrix)
    factors = _diagonalize(buffer)
    logger.debug('smith %dx%d over %s: rank %d after %d steps',
                 matrix.rows, matrix.cols, matrix.ring.name, len(factors), buffer.steps)
    return SmithDecomposition(
        P=buffer.to_matrix(buffer.P, matrix.rows),
        Pinv=buffer.to_matrix(buffer.Pinv, matrix.rows),
        inv_factors=tuple(factors),
        Q=buffer.to_matrix(buffer.Q, matrix.cols),
        Qinv=buffer.to_matrix(buffer.Qinv, matrix.cols),
        rank=len(factors),
    )


def invariant_factors(matrix):
    """변환행렬 없이 0 이 아닌 불변인자만 계산합니다 (직사각행렬 허용)."""
    buffer = EliminationBuffer(matrix, track_rows=False, track_cols=False)
    return _diagonalize(buffer)
