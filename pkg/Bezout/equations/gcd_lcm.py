"""
해 집합의 왼쪽 최대공약수 F 와 왼쪽 최소공배수 N.

    F = U * [[M1, 0], [M2, 0], [0, I]] * Qinv
    N = U * [[M1, 0], [M2, 0], [0, 0]] * Qinv = K * X   (모든 해 X 에 대해)
    K = U * diag(I_t, 0) * Uinv

모든 해는 X = F * M,  M = Q * [[I_t, 0], [T3, T4]] * Qinv 로 F 의 오른쪽 배수입니다.
g.c.d. / l.c.m. 은 오른쪽 동반(right associate) 관계까지만 정해지므로
비교는 mutually_associate 로 합니다.
"""
from dataclasses import dataclass

from matrices.exceptions import DimensionMismatch
from matrices.matrix import DenseMatrix, block_compose

from .solver import (
    SolutionParameter, build_solution_set, certify, general_solution, particular_solution,
)


@dataclass(frozen=True)
class GcdLcmPair:
    F: DenseMatrix
    N: DenseMatrix
    K: DenseMatrix


def left_gcd(solution_set):
    ss = solution_set
    return general_solution(ss, SolutionParameter.identity(ss.ring, ss.n, ss.t))


def left_lcm(solution_set):
    return particular_solution(solution_set)


def projector(solution_set):
    ss = solution_set
    ring = ss.ring
    middle = DenseMatrix.diagonal(ring, [ring.one] * ss.t, ss.n, ss.n)
    return ss.U.multiply(middle).multiply(ss.Uinv)


def gcd_lcm_pair(solution_set):
    return GcdLcmPair(F=left_gcd(solution_set), N=left_lcm(solution_set), K=projector(solution_set))


def cofactor(solution_set, parameter):
    """F * M == general_solution(ss, parameter) 를 만족하는 M"""
    ss = solution_set
    parameter.validate(ss.n, ss.t)
    ring = ss.ring
    middle = block_compose([
        [DenseMatrix.identity(ring, ss.t), DenseMatrix.zeros(ring, ss.t, ss.n - ss.t)],
        [parameter.T3, parameter.T4],
    ])
    return ss.Q.multiply(middle).multiply(ss.Qinv)


def left_divides(D, A):
    """D * W = A 인 W 가 있으면 (True, W), 없으면 (False, None)"""
    certificate = certify(D, A)
    if not certificate.solvable:
        return False, None
    return True, particular_solution(build_solution_set(certificate))


def right_divides(X, N):
    """G * X = N 인 G 가 있으면 (True, G). 가환환이므로 전치해서 left_divides 로 풉니다."""
    ok, witness = left_divides(X.transpose(), N.transpose())
    return ok, (witness.transpose() if ok else None)


def mutually_associate(first, second):
    if first.shape != second.shape:
        raise DimensionMismatch(f'shapes {first.shape} and {second.shape} differ')
    return left_divides(first, second)[0] and left_divides(second, first)[0]
