"""
단위 가역(unimodular) 2x2 변환으로 행/열을 소거하는 작업 버퍼.

행 연산은 P 에 그대로, Pinv 에는 역연산을 오른쪽에서 적용하고,
열 연산은 Q 에 그대로, Qinv 에는 역연산을 왼쪽에서 적용합니다.
따라서 항상 P * A * Q == M, P * Pinv == I, Q * Qinv == I 가 유지됩니다.
"""
from rings.exceptions import NotDivisible

from matrices.matrix import DenseMatrix


def _identity_rows(ring, n):
    return DenseMatrix.identity(ring, n).to_rows()


class EliminationBuffer:

    def __init__(self, matrix, track_rows=True, track_cols=True):
        self.ring = matrix.ring
        self.m = matrix.rows
        self.n = matrix.cols
        self.M = matrix.to_rows()
        self.P = _identity_rows(self.ring, self.m) if track_rows else None
        self.Pinv = _identity_rows(self.ring, self.m) if track_rows else None
        self.Q = _identity_rows(self.ring, self.n) if track_cols else None
        self.Qinv = _identity_rows(self.ring, self.n) if track_cols else None
        self.steps = 0

    def is_zero(self, i, j):
        return self.ring.is_zero(self.M[i][j])

    # ---------- 기본 연산 ----------
    @staticmethod
    def _mix_rows(rows, i, j, a, b, c, d):
        ri, rj = rows[i], rows[j]
        rows[i] = [a * x + b * y for x, y in zip(ri, rj)]
        rows[j] = [c * x + d * y for x, y in zip(ri, rj)]

    @staticmethod
    def _mix_cols(rows, i, j, a, b, c, d):
        for r in rows:
            x, y = r[i], r[j]
            r[i] = a * x + b * y
            r[j] = c * x + d * y

    def swap_rows(self, i, j):
        self.steps += 1
        self.M[i], self.M[j] = self.M[j], self.M[i]
        if self.P is not None:
            self.P[i], self.P[j] = self.P[j], self.P[i]
            for r in self.Pinv:
                r[i], r[j] = r[j], r[i]

    def swap_cols(self, i, j):
        self.steps += 1
        for r in self.M:
            r[i], r[j] = r[j], r[i]
        if self.Q is not None:
            for r in self.Q:
                r[i], r[j] = r[j], r[i]
            self.Qinv[i], self.Qinv[j] = self.Qinv[j], self.Qinv[i]

    def combine_rows(self, i, j, a, b, c, d):
        """row_i <- a*row_i + b*row_j, row_j <- c*row_i + d*row_j  (ad - bc = 1)"""
        self.steps += 1
        self._mix_rows(self.M, i, j, a, b, c, d)
        if self.P is not None:
            self._mix_rows(self.P, i, j, a, b, c, d)
            self._mix_cols(self.Pinv, i, j, d, -c, -b, a)

    def combine_cols(self, i, j, a, b, c, d):
        """col_i <- a*col_i + b*col_j, col_j <- c*col_i + d*col_j  (ad - bc = 1)"""
        self.steps += 1
        self._mix_cols(self.M, i, j, a, b, c, d)
        if self.Q is not None:
            self._mix_cols(self.Q, i, j, a, b, c, d)
            self._mix_rows(self.Qinv, i, j, d, -c, -b, a)

    def scale_row(self, i, unit):
        ring = self.ring
        inverse = ring.unit_inverse(unit)
        self.steps += 1
        self.M[i] = [unit * x for x in self.M[i]]
        if self.P is not None:
            self.P[i] = [unit * x for x in self.P[i]]
            for r in self.Pinv:
                r[i] = r[i] * inverse

    def scale_col(self, j, unit):
        ring = self.ring
        inverse = ring.unit_inverse(unit)
        self.steps += 1
        for r in self.M:
            r[j] = r[j] * unit
        if self.Q is not None:
            for r in self.Q:
                r[j] = r[j] * unit
            self.Qinv[j] = [inverse * x for x in self.Qinv[j]]

    # ---------- 2x2 소거 ----------
    def _reduction(self, pivot, target):
        """
        (pivot, target) -> (g, 0) 으로 보내는 행렬 [[a, b], [c, d]] (ad - bc = 1).
        pivot 이 target 을 나누면 g = pivot 으로 유지됩니다.
        """
        ring = self.ring
        try:
            q = ring.exact_div(target, pivot)
            return ring.one, ring.zero, -q, ring.one
        except NotDivisible:
            pass
        bezout = ring.ext_gcd(pivot, target)
        a_ = ring.exact_div(pivot, bezout.g)
        b_ = ring.exact_div(target, bezout.g)
        return bezout.u, bezout.v, -b_, a_

    def clear_below(self, s, i):
        """M[i][s] 를 행 연산으로 0 으로 만듭니다 (피벗 M[s][s] != 0)."""
        if self.is_zero(i, s):
            return
        self.combine_rows(s, i, *self._reduction(self.M[s][s], self.M[i][s]))

    def clear_right(self, s, j, pivot_row=None):
        """M[pivot_row][j] 를 열 연산으로 0 으로 만들고 gcd 를 열 s 로 모읍니다."""
        row = s if pivot_row is None else pivot_row
        if self.is_zero(row, j):
            return
        if self.is_zero(row, s):
            self.swap_cols(s, j)
            return
        self.combine_cols(s, j, *self._reduction(self.M[row][s], self.M[row][j]))

    def to_matrix(self, rows, n_cols):
        return DenseMatrix.from_rows(self.ring, rows, n_cols)
