"""작은 정수 방정식의 모든 해를 직접 나열하는 기준(ground truth) 탐색"""
import itertools

from django.conf import settings

from matrices.exceptions import DimensionMismatch
from matrices.matrix import DenseMatrix
from rings.domains import INTEGERS

from .exceptions import TooLarge, UnsupportedRing


def exhaustive_solutions(B, A, bound, ceiling=None):
    """원소가 [-bound, bound] 인 모든 X 중 B * X = A 인 것 (행 우선 사전식 순서)"""
    if B.ring.name != INTEGERS.name:
        raise UnsupportedRing(B.ring)
    if not (B.is_square and A.is_square and B.shape == A.shape):
        raise DimensionMismatch(f'B and A must be square of equal size, got {B.shape} and {A.shape}')
    if ceiling is None:
        ceiling = settings.BEZOUT.get('EXHAUSTIVE_STATE_CEILING', 100000)
    n = B.rows
    states = (2 * bound + 1) ** (n * n)
    if states > ceiling:
        raise TooLarge(states, ceiling)

    # BX = A 는 열마다 독립인 B x = a 문제로 나뉩니다
    values = range(-bound, bound + 1)
    candidates = [
        [x for x in itertools.product(values, repeat=n)
         if all(sum(B[i, k] * x[k] for k in range(n)) == A[i, j] for i in range(n))]
        for j in range(n)
    ]
    solutions = []
    for columns in itertools.product(*candidates):
        solutions.append(DenseMatrix.from_rows(INTEGERS, [list(r) for r in zip(*columns)], n))
    solutions.sort(key=lambda m: m.to_rows())
    return solutions
