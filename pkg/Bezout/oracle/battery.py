"""
한 방정식 인스턴스에 대한 교차 검증 배터리.

주 인스턴스 검사 뒤, 단위 가역 행렬 V, W1, W2 로 섞은
(V B W1, V A W2) 인스턴스를 trials 개 만들어 같은 검사를 반복합니다.
섞은 인스턴스는 원래 인스턴스와 가해성이 같아야 합니다.
"""
import logging
import random
from dataclasses import dataclass

from equations.gcd_lcm import cofactor, gcd_lcm_pair, mutually_associate
from equations.solver import (
    SolutionParameter, annihilator_generators, build_solution_set, certify,
    check_solvable_augmented, general_solution, recover_parameter,
)
from matrices.generators import random_matrix, random_unimodular_pair

from .hnf_solver import hnf_solve
from .modules import column_module

logger = logging.getLogger(__name__)

PARAMETER_BOUND = 2


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''

    @property
    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name} {self.detail}".rstrip()


def _random_parameter(ring, rng, n, t, degree):
    return SolutionParameter(
        T3=random_matrix(ring, rng, n - t, t, PARAMETER_BOUND, degree),
        T4=random_matrix(ring, rng, n - t, n - t, PARAMETER_BOUND, degree),
    )


class Battery:
    """검사 결과를 실행 순서대로 모읍니다."""

    def __init__(self, samples=3, degree=0):
        self.samples = samples
        self.degree = degree
        self.results = []

    def record(self, name, passed, detail=''):
        self.results.append(CheckResult(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def check_instance(self, prefix, B, A, rng):
        """한 인스턴스의 모든 검사. (certificate, GcdLcmPair 또는 None) 을 돌려줍니다."""
        certificate = certify(B, A)

        # 1. Smith 분해 불변식
        problems = certificate.snf_a.violations(A) + certificate.snf_b.violations(B)
        self.record(f'{prefix}smith-invariants', not problems,
                    '; '.join(problems) or f'n={certificate.n} k={certificate.k} t={certificate.t}')

        # 2. 세 가지 판정의 일치
        X_hnf = hnf_solve(B, A)
        verdicts = (certificate.solvable, check_solvable_augmented(B, A), X_hnf is not None)
        detail = 'certify={} augmented={} hnf={}'.format(*('yes' if v else 'no' for v in verdicts))
        if not certificate.solvable:
            i, j = certificate.failing_cell
            detail += f' cell=({i},{j})'
        self.record(f'{prefix}solvability-agreement', len(set(verdicts)) == 1, detail)
        if X_hnf is not None:
            self.record(f'{prefix}hnf-solution', B.multiply(X_hnf) == A, 'B*X_hnf = A')
        if not certificate.solvable:
            return certificate, None

        # 3. g.c.d. / l.c.m. 정리와 해 집합 검사
        solution_set = build_solution_set(certificate)
        pair = gcd_lcm_pair(solution_set)
        self.record(f'{prefix}theorem-gcd', B.multiply(pair.F) == A, 'B*F = A')
        self.record(f'{prefix}theorem-lcm', B.multiply(pair.N) == A, 'B*N = A')

        solves = divides = projects = True
        for _ in range(self.samples):
            parameter = _random_parameter(B.ring, rng, solution_set.n, solution_set.t, self.degree)
            X = general_solution(solution_set, parameter)
            solves = solves and B.multiply(X) == A
            divides = divides and pair.F.multiply(cofactor(solution_set, parameter)) == X
            projects = projects and pair.K.multiply(X) == pair.N
        self.record(f'{prefix}general-solution', solves, f'B*X(p) = A for {self.samples} random p')
        self.record(f'{prefix}gcd-divides-solutions', divides, f'F*M(p) = X(p) for {self.samples} random p')
        self.record(f'{prefix}lcm-projector', projects, f'K*X(p) = N for {self.samples} random p')

        Z = annihilator_generators(certificate.snf_b)
        self.record(f'{prefix}annihilator', B.multiply(Z).is_zero(), 'B*Z = 0')
        if X_hnf is not None:
            self.record(f'{prefix}hnf-in-coset', recover_parameter(solution_set, X_hnf) is not None,
                        'U^-1 * X_hnf * Q matches the fixed rows')
        self.record(f'{prefix}column-module-gcd',
                    column_module([pair.N, Z]) == column_module([pair.F]),
                    'colmod([N, Ann]) = colmod([F])')
        return certificate, pair

    def check_expected(self, name, computed, expected):
        if expected.shape != computed.shape:
            return self.record(name, False, f'shape {expected.shape} differs from {computed.shape}')
        return self.record(name, mutually_associate(computed, expected), 'mutually associate')


def perturb(B, A, rng, steps, degree=0):
    """(V B W1, V A W2): 가해성은 그대로이고 해는 W1^-1 X W2 로 옮겨갑니다."""
    ring = B.ring
    n = B.rows
    V, _ = random_unimodular_pair(ring, rng, n, steps, 1, degree)
    W1, _ = random_unimodular_pair(ring, rng, n, steps, 1, degree)
    W2, _ = random_unimodular_pair(ring, rng, n, steps, 1, degree)
    return V.multiply(B).multiply(W1), V.multiply(A).multiply(W2)


def run_battery(B, A, trials=1, seed=7, steps=6, degree=0, samples=3, expect_gcd=None, expect_lcm=None):
    """
    검사 결과 목록(CheckResult)을 돌려줍니다.
    각 섞기 시행은 seed + 시행 번호로 만든 자기 난수 생성기를 씁니다.
    """
    battery = Battery(samples=samples, degree=degree)
    certificate, pair = battery.check_instance('', B, A, random.Random(seed))

    if expect_gcd is not None:
        if pair is None:
            battery.record('expected-gcd', False, 'equation has no solution')
        else:
            battery.check_expected('expected-gcd', pair.F, expect_gcd)
    if expect_lcm is not None:
        if pair is None:
            battery.record('expected-lcm', False, 'equation has no solution')
        else:
            battery.check_expected('expected-lcm', pair.N, expect_lcm)

    for trial in range(trials):
        rng = random.Random(seed + trial)
        B2, A2 = perturb(B, A, rng, steps, degree)
        prefix = f'trial-{trial + 1}:'
        perturbed, _ = battery.check_instance(prefix, B2, A2, rng)
        battery.record(f'{prefix}solvability-preserved', perturbed.solvable == certificate.solvable,
                       f"{'solvable' if certificate.solvable else 'unsolvable'} before and after")
        logger.debug('battery trial %d finished, all passed so far: %s', trial + 1, battery.passed)

    return battery.results
