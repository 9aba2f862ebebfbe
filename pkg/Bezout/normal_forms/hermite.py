"""
열(column) 방향 Hermite 정규형: A * W = H, W 는 단위 가역.

H 의 모양
  - 열 c 의 피벗은 그 열의 첫 번째 0 이 아닌 행이고, 피벗 행은 열 순서대로 증가
  - 피벗은 정규 대표원 (정수: 양수, 다항식: monic)
  - 피벗 행에서 앞쪽 열의 원소는 피벗으로 축약 (정수: [0, 피벗), 다항식: 차수 < 피벗 차수)
  - rank 이후의 열은 모두 0
H 는 A 의 열 가군(column module)에 의해 유일하게 정해집니다.
"""
from dataclasses import dataclass
from typing import Tuple

from matrices.matrix import DenseMatrix

from .elimination import EliminationBuffer


@dataclass(frozen=True)
class HermiteDecomposition:
    H: DenseMatrix
    W: DenseMatrix
    pivot_rows: Tuple[int, ...]

    @property
    def rank(self):
        return len(self.pivot_rows)


def hermite_col(matrix):
    ring = matrix.ring
    buffer = EliminationBuffer(matrix, track_rows=False)
    pivot_rows = []
    r = 0
    for i in range(buffer.m):
        if r == buffer.n:
            break
        for j in range(r + 1, buffer.n):
            buffer.clear_right(r, j, pivot_row=i)
        if buffer.is_zero(i, r):
            continue

        _, unit = ring.normalize(buffer.M[i][r])
        if unit != ring.one:
            buffer.scale_col(r, ring.unit_inverse(unit))
        pivot = buffer.M[i][r]
        for c in range(r):
            q = ring.reduce_quotient(buffer.M[i][c], pivot)
            if not ring.is_zero(q):
                # col_c <- col_c - q * col_r
                buffer.combine_cols(c, r, ring.one, -q, ring.zero, ring.one)
        pivot_rows.append(i)
        r += 1

    return HermiteDecomposition(
        H=buffer.to_matrix(buffer.M, matrix.cols),
        W=buffer.to_matrix(buffer.Q, matrix.cols),
        pivot_rows=tuple(pivot_rows),
    )
