"""
행렬 방정식 B * X = A 의 가해성 판정과 전체 해 매개화.

Smith 분해  P*A*Q = E (rank k),  V*B*U = Phi (rank t)  와  L = V * Pinv 에 대해

    B X = A 가 해를 가짐  <=>  Phi * S = L * E 를 만족하는 S 가 존재
                          <=>  i <= t, j <= k 에서 phi_i | l_ij * e_j  이고
                               i > t, j <= k 에서 l_ij = 0

이 때 모든 해는 X = U * [[M1, 0], [M2, 0], [T3, T4]] * Qinv 꼴이며,
[M1; M2] 의 (i, j) 원소는 l_ij * e_j / phi_i 입니다.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from matrices.exceptions import DimensionMismatch
from matrices.matrix import DenseMatrix, hstack, vstack
from normal_forms.smith import SmithDecomposition, invariant_factors, smith

from .exceptions import InvariantViolation, NotSolvable

logger = logging.getLogger(__name__)


def _require_square_pair(B, A):
    if not (B.is_square and A.is_square and B.shape == A.shape):
        raise DimensionMismatch(f'B and A must be square of equal size, got {B.shape} and {A.shape}')
    return B.rows


def l_set_violation(L, eps, phis, n=None):
    """
    L 이 L(E, Phi) 에 속하는지 검사합니다.
    속하면 None, 아니면 처음 실패한 (i, j) 칸 (1-based) 을 돌려줍니다.
    """
    ring = L.ring
    n = L.rows if n is None else n
    k, t = len(eps), len(phis)
    for i in range(n):
        for j in range(k):
            entry = L[i, j]
            if i < t:
                ok = ring.divides(phis[i], entry * eps[j])
            else:
                ok = ring.is_zero(entry)
            if not ok:
                return i + 1, j + 1
    return None


def displayed_l_entry_ok(ring, entry, phi, eps):
    """(phi / (phi, eps)) | entry 꼴의 칸별 조건 (phi | entry*eps 와 동치)"""
    return ring.divides(ring.exact_div(phi, ring.gcd(phi, eps)), entry)


@dataclass(frozen=True)
class SolvabilityCertificate:
    snf_a: SmithDecomposition
    snf_b: SmithDecomposition
    L: DenseMatrix
    n: int
    k: int
    t: int
    solvable: bool
    failing_cell: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if not self.L.is_unimodular():
            raise InvariantViolation('L = V * Pinv is not unimodular')
        if not self.solvable:
            return
        ring = self.L.ring
        if self.t < self.k:
            raise InvariantViolation(f'solvable certificate with t={self.t} < k={self.k}')
        for i in range(self.k):
            if not ring.divides(self.phis[i], self.eps[i]):
                raise InvariantViolation(f'phi_{i + 1} does not divide eps_{i + 1}')

    @property
    def eps(self):
        return self.snf_a.inv_factors

    @property
    def phis(self):
        return self.snf_b.inv_factors


def certify(B, A):
    n = _require_square_pair(B, A)
    snf_a = smith(A)
    snf_b = smith(B)
    L = snf_b.P.multiply(snf_a.Pinv)
    cell = l_set_violation(L, snf_a.inv_factors, snf_b.inv_factors, n)
    logger.debug('certify n=%d k=%d t=%d: %s', n, snf_a.rank, snf_b.rank,
                 'solvable' if cell is None else f'fails at {cell}')
    return SolvabilityCertificate(
        snf_a=snf_a,
        snf_b=snf_b,
        L=L,
        n=n,
        k=snf_a.rank,
        t=snf_b.rank,
        solvable=cell is None,
        failing_cell=cell,
    )


def check_solvable_augmented(B, A):
    """B 와 [A B] 의 불변인자가 같으면 해가 존재합니다."""
    _require_square_pair(B, A)
    return invariant_factors(B) == invariant_factors(hstack([A, B]))


@dataclass(frozen=True)
class SolutionParameter:
    T3: DenseMatrix
    T4: DenseMatrix

    def validate(self, n, t):
        if self.T3.shape != (n - t, t) or self.T4.shape != (n - t, n - t):
            raise DimensionMismatch(
                f'parameter blocks must be {(n - t, t)} and {(n - t, n - t)}, '
                f'got {self.T3.shape} and {self.T4.shape}')

    @classmethod
    def from_block(cls, block, t):
        """[T3 T4] 한 덩어리 행렬을 나눕니다."""
        n = block.cols
        if block.rows != n - t:
            raise DimensionMismatch(f'[T3 T4] must be {(n - t, n)}, got {block.shape}')
        return cls(T3=block.block(0, n - t, 0, t), T4=block.block(0, n - t, t, n))

    @classmethod
    def zero(cls, ring, n, t):
        return cls(T3=DenseMatrix.zeros(ring, n - t, t), T4=DenseMatrix.zeros(ring, n - t, n - t))

    @classmethod
    def identity(cls, ring, n, t):
        return cls(T3=DenseMatrix.zeros(ring, n - t, t), T4=DenseMatrix.identity(ring, n - t))


@dataclass(frozen=True)
class AnnihilatorParameter:
    D: DenseMatrix


@dataclass(frozen=True)
class SolutionSet:
    M1: DenseMatrix
    M2: DenseMatrix
    U: DenseMatrix
    Uinv: DenseMatrix
    Q: DenseMatrix
    Qinv: DenseMatrix
    n: int
    k: int
    t: int

    @property
    def ring(self):
        return self.U.ring

    @property
    def kernel(self):
        """[M1; M2] (t x k)"""
        return vstack([self.M1, self.M2])

    def fixed_rows(self):
        """해의 좌표 U^-1 * X * Q 에서 고정되는 위 t 행 [[M1, 0], [M2, 0]]"""
        return hstack([self.kernel, DenseMatrix.zeros(self.ring, self.t, self.n - self.k)])

    def coordinates(self, parameter):
        parameter.validate(self.n, self.t)
        return vstack([self.fixed_rows(), hstack([parameter.T3, parameter.T4])])


def kernel_matrix(L, eps, phis):
    """[M1; M2] (t x k): (i, j) 원소는 l_ij * e_j / phi_i"""
    ring = L.ring
    k, t = len(eps), len(phis)
    return DenseMatrix.from_rows(
        ring, [[ring.exact_div(L[i, j] * eps[j], phis[i]) for j in range(k)] for i in range(t)], k)


def build_solution_set(certificate):
    if not certificate.solvable:
        raise NotSolvable(certificate.failing_cell)
    k, t = certificate.k, certificate.t
    core = kernel_matrix(certificate.L, certificate.eps, certificate.phis)
    return SolutionSet(
        M1=core.block(0, k, 0, k),
        M2=core.block(k, t, 0, k),
        U=certificate.snf_b.Q,
        Uinv=certificate.snf_b.Qinv,
        Q=certificate.snf_a.Q,
        Qinv=certificate.snf_a.Qinv,
        n=certificate.n,
        k=k,
        t=t,
    )


def general_solution(solution_set, parameter):
    S = solution_set.coordinates(parameter)
    return solution_set.U.multiply(S).multiply(solution_set.Qinv)


def particular_solution(solution_set):
    ss = solution_set
    return general_solution(ss, SolutionParameter.zero(ss.ring, ss.n, ss.t))


def annihilator_element(snf_b, parameter):
    U = snf_b.Q
    n, t = U.rows, snf_b.rank
    D = parameter.D
    if D.shape != (n - t, n):
        raise DimensionMismatch(f'D must be {(n - t, n)}, got {D.shape}')
    return U.multiply(vstack([DenseMatrix.zeros(U.ring, t, n), D]))


def annihilator_generators(snf_b):
    """U * [0; 0 I]: 0 이 아닌 열들이 Ann_r(B) 를 열 가군으로 생성합니다."""
    ring = snf_b.ring
    n, t = snf_b.Q.rows, snf_b.rank
    D = hstack([DenseMatrix.zeros(ring, n - t, t), DenseMatrix.identity(ring, n - t)])
    return annihilator_element(snf_b, AnnihilatorParameter(D))


def coset_coordinates(solution_set, X):
    return solution_set.Uinv.multiply(X).multiply(solution_set.Q)


def recover_parameter(solution_set, X):
    """X 가 해 집합에 속하면 그 (T3, T4) 를, 아니면 None 을 돌려줍니다."""
    ss = solution_set
    Y = coset_coordinates(ss, X)
    if Y.block(0, ss.t, 0, ss.n) != ss.fixed_rows():
        return None
    return SolutionParameter(T3=Y.block(ss.t, ss.n, 0, ss.t), T4=Y.block(ss.t, ss.n, ss.t, ss.n))


def solve(B, A):
    """해가 있으면 (certificate, solution_set), 없으면 (certificate, None)"""
    certificate = certify(B, A)
    if not certificate.solvable:
        return certificate, None
    return certificate, build_solution_set(certificate)
