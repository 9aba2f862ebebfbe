"""
Smith 분해를 쓰지 않는 독립 풀이기.

B * W = H (열 Hermite 형) 로 바꾼 뒤 H * Y = A 를 열마다 피벗 순서로 전진 대입하고
X = W * Y 를 돌려줍니다. 자유 성분은 0 으로 둡니다.
"""
import logging

from matrices.exceptions import DimensionMismatch
from matrices.matrix import DenseMatrix
from normal_forms.hermite import hermite_col

logger = logging.getLogger(__name__)


def _solve_column(ring, H, pivot_rows, target):
    residual = list(target)
    y = [ring.zero] * H.cols
    for c, row in enumerate(pivot_rows):
        pivot = H[row, c]
        if not ring.divides(pivot, residual[row]):
            return None
        coefficient = ring.exact_div(residual[row], pivot)
        if ring.is_zero(coefficient):
            continue
        y[c] = coefficient
        for i in range(row, H.rows):
            residual[i] = residual[i] - coefficient * H[i, c]
    # 피벗 행 사이에 남은 값이 있으면 해가 없음
    if any(not ring.is_zero(r) for r in residual):
        return None
    return y


def hnf_solve(B, A):
    """B * X = A 의 해 하나, 없으면 None"""
    if not (B.is_square and A.is_square and B.shape == A.shape):
        raise DimensionMismatch(f'B and A must be square of equal size, got {B.shape} and {A.shape}')
    ring = B.ring
    hermite = hermite_col(B)
    columns = []
    for j in range(A.cols):
        y = _solve_column(ring, hermite.H, hermite.pivot_rows, A.column(j))
        if y is None:
            logger.debug('hnf_solve: column %d has no solution', j + 1)
            return None
        columns.append(y)
    Y = DenseMatrix.from_rows(ring, [list(r) for r in zip(*columns)], A.cols) if columns \
        else DenseMatrix.zeros(ring, B.cols, 0)
    return hermite.W.multiply(Y)
