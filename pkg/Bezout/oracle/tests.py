import io
import json
import random
import tempfile
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from equations.gcd_lcm import gcd_lcm_pair
from equations.solver import (
    annihilator_generators, certify, check_solvable_augmented, recover_parameter, solve,
)
from matrices.exceptions import DimensionMismatch
from matrices.fileformat import read_matrix, write_matrix
from matrices.generators import random_matrix, random_unimodular
from matrices.matrix import DenseMatrix
from rings.domains import INTEGERS, RATIONAL_POLYNOMIALS

from .battery import CheckResult, run_battery
from .exceptions import TooLarge, UnsupportedRing
from .exhaustive import exhaustive_solutions
from .hnf_solver import hnf_solve
from .modules import column_module

Z = INTEGERS
QX = RATIONAL_POLYNOMIALS
FIXTURES = Path(__file__).resolve().parent.parent / 'equations' / 'fixtures'


def ints(rows):
    return DenseMatrix.from_ints(Z, rows)


def fixture(name):
    return read_matrix(FIXTURES / f'example_{name}.mat', Z)


def random_pair(ring, rng, n, bound, degree=0):
    """곱으로 만들지 않은 (B, A). 일부는 B 의 rank 를 낮추고 A 를 B 의 열 공간 근처에 둡니다."""
    roll = rng.random()
    if roll < 0.4:
        return random_matrix(ring, rng, n, n, bound, degree), random_matrix(ring, rng, n, n, bound, degree)
    r = rng.randint(1, n - 1) if n > 1 else 1
    B = random_matrix(ring, rng, n, r, bound, degree).multiply(random_matrix(ring, rng, r, n, 2, degree))
    if roll < 0.7:
        # B 의 열 몇 개와 작은 교란의 조합
        A = B.multiply(random_matrix(ring, rng, n, n, 1, degree))
        i, j = rng.randrange(n), rng.randrange(n)
        bump = DenseMatrix.from_rows(ring, [[ring.one if (a, b) == (i, j) else ring.zero
                                             for b in range(n)] for a in range(n)])
        return B, A + bump.scale(ring.from_int(rng.choice([0, 1, 2])))
    return B, random_matrix(ring, rng, n, n, bound, degree)


class HnfSolverTest(SimpleTestCase):

    def test_example(self):
        B, A = fixture('B'), fixture('A')
        X = hnf_solve(B, A)
        self.assertIsNotNone(X)
        self.assertEqual(B.multiply(X), A)

    def test_identity_and_obstruction(self):
        A = ints([[1, 2], [3, 4]])
        self.assertEqual(hnf_solve(DenseMatrix.identity(Z, 2), A), A)
        self.assertIsNone(hnf_solve(ints([[2, 0], [0, 2]]), DenseMatrix.identity(Z, 2)))
        self.assertIsNone(hnf_solve(ints([[1, 0], [0, 0]]), ints([[0, 0], [0, 1]])))
        with self.assertRaises(DimensionMismatch):
            hnf_solve(DenseMatrix.identity(Z, 2), DenseMatrix.identity(Z, 3))

    def test_does_not_use_smith(self):
        with mock.patch('normal_forms.smith.smith', side_effect=AssertionError('smith called')):
            self.assertIsNotNone(hnf_solve(fixture('B'), fixture('A')))


class SolvabilityAgreementTest(SimpleTestCase):
    """certify, 첨가 행렬 불변인자, Hermite 풀이기의 판정 일치"""

    def assertAgreement(self, B, A):
        certificate = certify(B, A)
        X = hnf_solve(B, A)
        verdicts = (certificate.solvable, check_solvable_augmented(B, A), X is not None)
        self.assertEqual(len(set(verdicts)), 1, verdicts)
        if X is not None:
            self.assertEqual(B.multiply(X), A)
            _, solution_set = solve(B, A)
            self.assertIsNotNone(recover_parameter(solution_set, X))
        return certificate.solvable

    def test_integer_pairs(self):
        rng = random.Random(505)
        outcomes = set()
        for index in range(200):
            n = rng.randint(2, 5)
            B, A = random_pair(Z, rng, n, 3)
            with self.subTest(index=index):
                outcomes.add(self.assertAgreement(B, A))
        self.assertEqual(outcomes, {True, False})

    def test_polynomial_pairs(self):
        rng = random.Random(506)
        for index in range(50):
            n = rng.randint(2, 3)
            B, A = random_pair(QX, rng, n, 3, degree=2)
            with self.subTest(index=index):
                self.assertAgreement(B, A)

    def test_example(self):
        self.assertTrue(self.assertAgreement(fixture('B'), fixture('A')))


class ColumnModuleTest(SimpleTestCase):

    def test_identity(self):
        identity = DenseMatrix.identity(Z, 3)
        self.assertEqual(column_module([identity]).canonical, identity)

    def test_unimodular_images_generate_the_same_module(self):
        rng = random.Random(8)
        for _ in range(20):
            A = random_matrix(Z, rng, 3, 3)
            W = random_unimodular(Z, rng, 3)
            with self.subTest(A=A):
                self.assertEqual(column_module([A, A.multiply(W)]), column_module([A]))

    def test_dimension_checks(self):
        with self.assertRaises(DimensionMismatch):
            column_module([DenseMatrix.identity(Z, 2), DenseMatrix.identity(Z, 3)])
        with self.assertRaises(DimensionMismatch):
            column_module([])

    def test_example_gcd_module(self):
        snf_b = certify(fixture('B'), fixture('A')).snf_b
        generators = annihilator_generators(snf_b)
        self.assertEqual(column_module([fixture('lcm'), generators]), column_module([fixture('gcd')]))

    def test_random_solvable_instances(self):
        rng = random.Random(606)
        for index in range(50):
            n = rng.randint(2, 5)
            r = rng.randint(1, n)
            B = random_matrix(Z, rng, n, r).multiply(random_matrix(Z, rng, r, n, 2))
            A = B.multiply(random_matrix(Z, rng, n, n))
            certificate, solution_set = solve(B, A)
            pair = gcd_lcm_pair(solution_set)
            Zgen = annihilator_generators(certificate.snf_b)
            with self.subTest(index=index):
                self.assertEqual(column_module([pair.N, Zgen]), column_module([pair.F]))


class ExhaustiveSolutionsTest(SimpleTestCase):

    def test_examples(self):
        diagonal = ints([[1, 0], [0, 2]])
        self.assertIn(DenseMatrix.identity(Z, 2), exhaustive_solutions(diagonal, diagonal, 2))
        zero = DenseMatrix.zeros(Z, 2, 2)
        self.assertEqual(len(exhaustive_solutions(zero, zero, 1)), 81)
        B = ints([[2, 0], [0, 0]])
        solutions = exhaustive_solutions(B, B, 1)
        self.assertEqual(len(solutions), 9)
        for X in solutions:
            self.assertEqual((X[0, 0], X[0, 1]), (1, 0))

    def test_limits(self):
        with self.assertRaises(TooLarge):
            exhaustive_solutions(DenseMatrix.identity(Z, 3), DenseMatrix.identity(Z, 3), 3)
        with override_settings(BEZOUT={'EXHAUSTIVE_STATE_CEILING': 10}):
            with self.assertRaises(TooLarge):
                exhaustive_solutions(DenseMatrix.identity(Z, 2), DenseMatrix.identity(Z, 2), 1)
        identity = DenseMatrix.identity(QX, 2)
        with self.assertRaises(UnsupportedRing):
            exhaustive_solutions(identity, identity, 1)

    def test_coset_completeness(self):
        rng = random.Random(707)
        for index in range(20):
            B = random_matrix(Z, rng, 2, 2, 2)
            C = random_matrix(Z, rng, 2, 2, 1)
            A = B.multiply(C)
            _, solution_set = solve(B, A)
            solutions = exhaustive_solutions(B, A, 2)
            with self.subTest(index=index, B=B):
                self.assertIn(C, solutions)
                for X in solutions:
                    self.assertIsNotNone(recover_parameter(solution_set, X))


class BatteryTest(SimpleTestCase):

    def test_example_passes(self):
        results = run_battery(fixture('B'), fixture('A'), trials=3, seed=7,
                              expect_gcd=fixture('gcd'), expect_lcm=fixture('lcm'))
        failed = [r.line for r in results if not r.passed]
        self.assertEqual(failed, [])
        names = [r.name for r in results]
        for name in ('smith-invariants', 'solvability-agreement', 'theorem-gcd', 'theorem-lcm',
                     'lcm-projector', 'column-module-gcd', 'expected-gcd', 'expected-lcm',
                     'trial-3:solvability-preserved'):
            self.assertIn(name, names)

    def test_unsolvable_instance_still_agrees(self):
        results = run_battery(ints([[2, 0], [0, 2]]), DenseMatrix.identity(Z, 2), trials=2)
        self.assertTrue(all(r.passed for r in results))
        self.assertNotIn('theorem-gcd', [r.name for r in results])

    def test_wrong_expectation_fails(self):
        results = run_battery(fixture('B'), fixture('A'), trials=0, expect_gcd=DenseMatrix.identity(Z, 7))
        self.assertIn('FAIL expected-gcd mutually associate', [r.line for r in results])

    def test_polynomial_instance(self):
        rng = random.Random(3)
        B = random_matrix(QX, rng, 2, 2, 2, 1)
        A = B.multiply(random_matrix(QX, rng, 2, 2, 2, 1))
        results = run_battery(B, A, trials=2, degree=1)
        self.assertEqual([r.line for r in results if not r.passed], [])

    def test_line_format(self):
        self.assertEqual(CheckResult('theorem-gcd', True, 'B*F = A').line, 'PASS theorem-gcd B*F = A')
        self.assertEqual(CheckResult('x', False).line, 'FAIL x')


class VerifyCommandTest(SimpleTestCase):
    B = str(FIXTURES / 'example_B.mat')
    A = str(FIXTURES / 'example_A.mat')

    def test_example_report(self):
        out = io.StringIO()
        call_command('verify', self.B, self.A, '--trials', '5', '--seed', '7',
                     '--expect-gcd', str(FIXTURES / 'example_gcd.mat'),
                     '--expect-lcm', str(FIXTURES / 'example_lcm.mat'), stdout=out)
        lines = out.getvalue().splitlines()
        self.assertTrue(lines)
        for line in lines:
            self.assertTrue(line.startswith('PASS '), line)
        self.assertIn('PASS expected-gcd mutually associate', lines)

    def test_json_report(self):
        out = io.StringIO()
        call_command('verify', self.B, self.A, '--trials', '1', '--json', stdout=out)
        payload = json.loads(out.getvalue())
        self.assertTrue(payload['passed'])
        self.assertEqual(set(payload['checks'][0]), {'name', 'passed', 'detail'})

    def test_failed_check_exits_with_one(self):
        out = io.StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', self.B, self.A, '--trials', '1',
                         '--expect-gcd', str(FIXTURES / 'example_B.mat'), stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('FAIL expected-gcd', out.getvalue())

    def test_trials_must_be_positive(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', self.B, self.A, '--trials', '0', stdout=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_perturbation_degree_follows_settings(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'I.mat'
            write_matrix(path, DenseMatrix.identity(QX, 2))
            for ring, configured, expected in (('polyq', 3, 3), ('polyq', 1, 1), ('int', 3, 0)):
                with self.subTest(ring=ring, configured=configured):
                    with override_settings(BEZOUT={'RANDOM_POLY_DEGREE': configured}), \
                            mock.patch('oracle.management.commands.verify.run_battery', return_value=[]) as battery:
                        source = str(path) if ring == 'polyq' else self.B
                        call_command('verify', source, source, '--ring', ring, '--trials', '1',
                                     stdout=io.StringIO())
                    self.assertEqual(battery.call_args.kwargs['degree'], expected)
