import io
import json
import random
import tempfile
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from Bezout.cli import run
from matrices.exceptions import DimensionMismatch
from matrices.fileformat import parse_matrix, read_matrix, write_matrix
from matrices.generators import random_matrix, random_unimodular
from matrices.matrix import DenseMatrix, hstack
from normal_forms.smith import smith
from rings.domains import INTEGERS, RATIONAL_POLYNOMIALS

from .exceptions import InvariantViolation, NotSolvable
from .gcd_lcm import (
    cofactor, gcd_lcm_pair, left_divides, left_gcd, left_lcm, mutually_associate, projector, right_divides,
)
from .solver import (
    AnnihilatorParameter, SolutionParameter, SolvabilityCertificate, annihilator_element,
    annihilator_generators, build_solution_set, certify, check_solvable_augmented,
    coset_coordinates, displayed_l_entry_ok, general_solution, kernel_matrix, l_set_violation,
    particular_solution, recover_parameter, solve,
)

Z = INTEGERS
QX = RATIONAL_POLYNOMIALS
FIXTURES = Path(__file__).resolve().parent / 'fixtures'
EXAMPLE_EPS = (1, 2, 6)
EXAMPLE_PHIS = (1, 1, 2, 4, 12)


def fixture(name):
    return read_matrix(FIXTURES / f'example_{name}.mat', Z)


def ints(rows):
    return DenseMatrix.from_ints(Z, rows)


def random_parameter(ring, rng, n, t, degree=0):
    return SolutionParameter(
        T3=random_matrix(ring, rng, n - t, t, 2, degree),
        T4=random_matrix(ring, rng, n - t, n - t, 2, degree),
    )


def random_instance(ring, rng, n, bound=5, degree=0):
    """A = B C 로 만든 해가 있는 방정식. 절반은 B 의 rank 를 낮춥니다."""
    if rng.random() < 0.5:
        B = random_matrix(ring, rng, n, n, bound, degree)
    else:
        r = rng.randint(0, n - 1)
        B = random_matrix(ring, rng, n, r, bound, degree).multiply(random_matrix(ring, rng, r, n, 2, degree)) \
            if r else DenseMatrix.zeros(ring, n, n)
    C = random_matrix(ring, rng, n, n, bound, degree)
    return B, B.multiply(C), C


class ExampleInstanceTest(SimpleTestCase):
    """7x7 정수 예제 (fixtures/example_*.mat)"""

    def setUp(self):
        self.A = fixture('A')
        self.B = fixture('B')

    def test_certificate(self):
        certificate = certify(self.B, self.A)
        self.assertTrue(certificate.solvable)
        self.assertIsNone(certificate.failing_cell)
        self.assertEqual((certificate.n, certificate.k, certificate.t), (7, 3, 5))
        self.assertEqual(certificate.eps, EXAMPLE_EPS)
        self.assertEqual(certificate.phis, EXAMPLE_PHIS)
        self.assertTrue(certificate.L.is_unimodular())
        self.assertEqual(certificate.L, certificate.snf_b.P.multiply(certificate.snf_a.Pinv))
        self.assertTrue(check_solvable_augmented(self.B, self.A))

    def test_displayed_l_is_in_the_solvable_set(self):
        L = fixture('L')
        self.assertTrue(L.is_unimodular())
        self.assertIsNone(l_set_violation(L, EXAMPLE_EPS, EXAMPLE_PHIS))
        for i in range(len(EXAMPLE_PHIS)):
            for j in range(len(EXAMPLE_EPS)):
                with self.subTest(i=i + 1, j=j + 1):
                    uniform = Z.divides(EXAMPLE_PHIS[i], L[i, j] * EXAMPLE_EPS[j])
                    self.assertTrue(uniform)
                    self.assertEqual(displayed_l_entry_ok(Z, L[i, j], EXAMPLE_PHIS[i], EXAMPLE_EPS[j]), uniform)

    def test_displayed_kernel(self):
        kernel = kernel_matrix(fixture('L'), EXAMPLE_EPS, EXAMPLE_PHIS)
        self.assertEqual(kernel, fixture('kernel'))
        self.assertEqual(kernel[0, 2], 6)
        self.assertEqual(kernel[4, 2], 1)

    def test_kernel_satisfies_phi_s_equals_l_e(self):
        certificate = certify(self.B, self.A)
        solution_set = build_solution_set(certificate)
        k, t = certificate.k, certificate.t
        left = DenseMatrix.diagonal(Z, certificate.phis).multiply(solution_set.kernel)
        right = certificate.L.multiply(certificate.snf_a.E).block(0, t, 0, k)
        self.assertEqual(left, right)

    def test_theorem(self):
        _, solution_set = solve(self.B, self.A)
        F, N = left_gcd(solution_set), left_lcm(solution_set)
        self.assertEqual(self.B.multiply(F), self.A)
        self.assertEqual(self.B.multiply(N), self.A)
        self.assertTrue(mutually_associate(F, fixture('gcd')))
        self.assertTrue(mutually_associate(N, fixture('lcm')))

    def test_displayed_gcd_and_lcm_are_solutions(self):
        self.assertEqual(self.B.multiply(fixture('gcd')), self.A)
        self.assertEqual(self.B.multiply(fixture('lcm')), self.A)

    def test_parametrized_solutions(self):
        _, solution_set = solve(self.B, self.A)
        self.assertEqual(general_solution(solution_set, SolutionParameter.zero(Z, 7, 5)), left_lcm(solution_set))
        self.assertEqual(general_solution(solution_set, SolutionParameter.identity(Z, 7, 5)),
                         left_gcd(solution_set))
        rng = random.Random(7)
        for _ in range(10):
            X = general_solution(solution_set, random_parameter(Z, rng, 7, 5))
            self.assertEqual(self.B.multiply(X), self.A)

    def test_annihilator(self):
        snf_b = smith(self.B)
        D = hstack([DenseMatrix.identity(Z, 2), DenseMatrix.zeros(Z, 2, 5)])
        Z1 = annihilator_element(snf_b, AnnihilatorParameter(D))
        self.assertTrue(self.B.multiply(Z1).is_zero())
        self.assertTrue(annihilator_element(snf_b, AnnihilatorParameter(DenseMatrix.zeros(Z, 2, 7))).is_zero())
        generators = annihilator_generators(snf_b)
        self.assertTrue(self.B.multiply(generators).is_zero())
        with self.assertRaises(DimensionMismatch):
            annihilator_element(snf_b, AnnihilatorParameter(DenseMatrix.zeros(Z, 3, 7)))

    def test_gcd_of_annihilator(self):
        # A = 0 이면 해 집합은 Ann_r(B) 이고 F 는 그 g.c.d.
        _, solution_set = solve(self.B, DenseMatrix.zeros(Z, 7, 7))
        F = left_gcd(solution_set)
        self.assertTrue(self.B.multiply(F).is_zero())
        self.assertTrue(left_lcm(solution_set).is_zero())
        rng = random.Random(4)
        snf_b = smith(self.B)
        for _ in range(5):
            element = annihilator_element(snf_b, AnnihilatorParameter(random_matrix(Z, rng, 2, 7, 3)))
            self.assertTrue(left_divides(F, element)[0])


class CertifyTest(SimpleTestCase):

    def test_identity_coefficient(self):
        A = ints([[1, 2], [3, 4]])
        certificate, solution_set = solve(DenseMatrix.identity(Z, 2), A)
        self.assertTrue(certificate.solvable)
        self.assertEqual(certificate.t, 2)
        self.assertEqual(particular_solution(solution_set), A)
        self.assertEqual(left_gcd(solution_set), A)
        self.assertEqual(left_lcm(solution_set), A)

    def test_parity_obstruction(self):
        B = ints([[2, 0], [0, 2]])
        A = DenseMatrix.identity(Z, 2)
        certificate = certify(B, A)
        self.assertFalse(certificate.solvable)
        self.assertEqual(certificate.failing_cell, (1, 1))
        self.assertFalse(check_solvable_augmented(B, A))
        self.assertEqual(solve(B, A), (certificate, None))
        with self.assertRaises(NotSolvable) as ctx:
            build_solution_set(certificate)
        self.assertEqual(ctx.exception.cell, (1, 1))

    def test_rows_beyond_rank_must_vanish(self):
        certificate = certify(ints([[1, 0], [0, 0]]), ints([[0, 0], [0, 1]]))
        self.assertFalse(certificate.solvable)
        self.assertEqual(certificate.failing_cell[0], 2)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            certify(DenseMatrix.identity(Z, 2), DenseMatrix.identity(Z, 3))
        with self.assertRaises(DimensionMismatch):
            check_solvable_augmented(DenseMatrix.zeros(Z, 2, 3), DenseMatrix.zeros(Z, 2, 3))

    def test_certificate_checks_rank_condition(self):
        with self.assertRaises(InvariantViolation):
            SolvabilityCertificate(
                snf_a=smith(DenseMatrix.identity(Z, 2)),
                snf_b=smith(ints([[1, 0], [0, 0]])),
                L=DenseMatrix.identity(Z, 2), n=2, k=2, t=1, solvable=True,
            )

    def test_certificate_requires_unimodular_l(self):
        for solvable in (True, False):
            with self.subTest(solvable=solvable), self.assertRaises(InvariantViolation):
                SolvabilityCertificate(
                    snf_a=smith(DenseMatrix.identity(Z, 2)),
                    snf_b=smith(DenseMatrix.identity(Z, 2)),
                    L=ints([[2, 0], [0, 1]]), n=2, k=2, t=2, solvable=solvable,
                    failing_cell=None if solvable else (1, 1),
                )
        rng = random.Random(23)
        for _ in range(20):
            n = rng.randint(2, 5)
            certificate = certify(random_matrix(Z, rng, n, n), random_matrix(Z, rng, n, n))
            self.assertTrue(certificate.L.is_unimodular())

    def test_parameter_dimensions(self):
        _, solution_set = solve(fixture('B'), fixture('A'))
        with self.assertRaises(DimensionMismatch):
            general_solution(solution_set, SolutionParameter.zero(Z, 7, 4))
        block = hstack([DenseMatrix.zeros(Z, 2, 5), DenseMatrix.identity(Z, 2)])
        self.assertEqual(SolutionParameter.from_block(block, 5), SolutionParameter.identity(Z, 7, 5))
        with self.assertRaises(DimensionMismatch):
            SolutionParameter.from_block(DenseMatrix.zeros(Z, 3, 7), 5)


class SolutionCosetTest(SimpleTestCase):

    def test_solution_differences_lie_in_annihilator(self):
        rng = random.Random(31)
        for _ in range(30):
            n = rng.randint(2, 5)
            B, A, _ = random_instance(Z, rng, n)
            _, solution_set = solve(B, A)
            t = solution_set.t
            with self.subTest(B=B):
                difference = (general_solution(solution_set, random_parameter(Z, rng, n, t))
                              - general_solution(solution_set, random_parameter(Z, rng, n, t)))
                coordinates = solution_set.Uinv.multiply(difference)
                self.assertTrue(coordinates.block(0, t, 0, n).is_zero())
                self.assertTrue(B.multiply(difference).is_zero())

    def test_recover_parameter(self):
        rng = random.Random(32)
        for _ in range(30):
            n = rng.randint(2, 5)
            B, A, C = random_instance(Z, rng, n)
            _, solution_set = solve(B, A)
            parameter = random_parameter(Z, rng, n, solution_set.t)
            with self.subTest(B=B):
                self.assertEqual(recover_parameter(solution_set, general_solution(solution_set, parameter)),
                                 parameter)
                # 원래 C 도 해 집합 안에 있습니다
                self.assertIsNotNone(recover_parameter(solution_set, C))
                self.assertEqual(coset_coordinates(solution_set, C).block(0, solution_set.t, 0, n),
                                 solution_set.fixed_rows())

    def test_non_solution_has_no_parameter(self):
        _, solution_set = solve(fixture('B'), fixture('A'))
        self.assertIsNone(recover_parameter(solution_set, DenseMatrix.identity(Z, 7)))


class GcdLcmTest(SimpleTestCase):

    def setUp(self):
        self.B = fixture('B')
        self.A = fixture('A')
        _, self.solution_set = solve(self.B, self.A)
        self.pair = gcd_lcm_pair(self.solution_set)

    def test_projector(self):
        K = projector(self.solution_set)
        self.assertEqual(K, self.pair.K)
        self.assertEqual(K.multiply(K), K)
        self.assertEqual(K.multiply(self.pair.F), self.pair.N)
        self.assertEqual(K.multiply(fixture('gcd')), self.pair.N)

    def test_cofactor(self):
        ss = self.solution_set
        identity = cofactor(ss, SolutionParameter.identity(Z, 7, 5))
        self.assertEqual(identity, DenseMatrix.identity(Z, 7))
        M = cofactor(ss, SolutionParameter.zero(Z, 7, 5))
        self.assertEqual(self.pair.F.multiply(M), self.pair.N)
        rng = random.Random(5)
        for _ in range(10):
            parameter = random_parameter(Z, rng, 7, 5)
            X = general_solution(ss, parameter)
            self.assertEqual(self.pair.F.multiply(cofactor(ss, parameter)), X)
            self.assertEqual(self.pair.K.multiply(X), self.pair.N)
            ok, witness = left_divides(self.pair.F, X)
            self.assertTrue(ok)
            self.assertEqual(self.pair.F.multiply(witness), X)
            ok, witness = right_divides(X, self.pair.N)
            self.assertTrue(ok)
            self.assertEqual(witness.multiply(X), self.pair.N)

    def test_divisibility(self):
        ok, witness = left_divides(self.B, self.A)
        self.assertTrue(ok)
        self.assertEqual(self.B.multiply(witness), self.A)
        self.assertEqual(left_divides(ints([[2, 0], [0, 2]]), DenseMatrix.identity(Z, 2)), (False, None))
        self.assertTrue(right_divides(DenseMatrix.identity(Z, 7), self.A)[0])
        ok, witness = right_divides(fixture('gcd'), fixture('lcm'))
        self.assertTrue(ok)
        self.assertEqual(witness.multiply(fixture('gcd')), fixture('lcm'))

    def test_mutually_associate(self):
        rng = random.Random(6)
        M = random_matrix(Z, rng, 3, 3)
        W1, W2 = random_unimodular(Z, rng, 3), random_unimodular(Z, rng, 3)
        self.assertTrue(mutually_associate(M, M.multiply(W1)))
        self.assertTrue(mutually_associate(M.multiply(W1), M))
        self.assertTrue(mutually_associate(M.multiply(W1), M.multiply(W1).multiply(W2)))
        self.assertTrue(mutually_associate(M, M.multiply(W1).multiply(W2)))
        self.assertFalse(mutually_associate(DenseMatrix.identity(Z, 2), ints([[2, 0], [0, 2]])))
        with self.assertRaises(DimensionMismatch):
            mutually_associate(DenseMatrix.identity(Z, 2), DenseMatrix.identity(Z, 3))

    def test_zero_right_hand_side(self):
        rng = random.Random(3)
        B = random_matrix(Z, rng, 3, 3)
        _, solution_set = solve(B, DenseMatrix.zeros(Z, 3, 3))
        self.assertTrue(left_lcm(solution_set).is_zero())


class RandomTheoremSuiteTest(SimpleTestCase):
    """무작위 해가 있는 방정식에서 g.c.d. / l.c.m. 정리 확인"""

    def check_instance(self, B, A, rng, samples, degree=0):
        ring = B.ring
        certificate = certify(B, A)
        self.assertEqual(certificate.snf_a.violations(A), [])
        self.assertEqual(certificate.snf_b.violations(B), [])
        self.assertTrue(certificate.solvable)
        self.assertTrue(check_solvable_augmented(B, A))
        solution_set = build_solution_set(certificate)
        pair = gcd_lcm_pair(solution_set)
        self.assertEqual(B.multiply(pair.F), A)
        self.assertEqual(B.multiply(pair.N), A)
        for _ in range(samples):
            parameter = random_parameter(ring, rng, solution_set.n, solution_set.t, degree)
            X = general_solution(solution_set, parameter)
            self.assertEqual(B.multiply(X), A)
            self.assertEqual(pair.F.multiply(cofactor(solution_set, parameter)), X)
            self.assertEqual(pair.K.multiply(X), pair.N)

    def test_integer_instances(self):
        rng = random.Random(2024)
        for index in range(200):
            n = rng.randint(2, 6)
            B = random_matrix(Z, rng, n, n, 5)
            C = random_matrix(Z, rng, n, n, 5)
            with self.subTest(index=index, n=n):
                self.check_instance(B, B.multiply(C), rng, samples=5)

    def test_rank_deficient_integer_instances(self):
        rng = random.Random(77)
        for index in range(60):
            n = rng.randint(2, 5)
            B, A, _ = random_instance(Z, rng, n)
            with self.subTest(index=index, n=n):
                self.check_instance(B, A, rng, samples=5)

    def test_polynomial_instances(self):
        rng = random.Random(99)
        for index in range(50):
            n = rng.randint(2, 3)
            B, A, _ = random_instance(QX, rng, n, bound=3, degree=2)
            with self.subTest(index=index, n=n):
                self.check_instance(B, A, rng, samples=3, degree=1)


class EquationCommandTest(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)
        self.B = str(FIXTURES / 'example_B.mat')
        self.A = str(FIXTURES / 'example_A.mat')

    def write(self, name, matrix):
        path = self.dir / name
        write_matrix(path, matrix)
        return str(path)

    def call(self, *args, **options):
        out = io.StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    def test_solve_gcd(self):
        text = self.call('solve', self.B, self.A, '--gcd')
        self.assertTrue(text.startswith('# solvable n=7 k=3 t=5\n# F\n'))
        self.assertTrue(mutually_associate(parse_matrix(text, Z), fixture('gcd')))

    def test_solve_default_is_particular(self):
        X = parse_matrix(self.call('solve', self.B, self.A), Z)
        self.assertEqual(fixture('B').multiply(X), fixture('A'))
        self.assertEqual(X, parse_matrix(self.call('solve', self.B, self.A, '--lcm'), Z))

    def test_solve_with_params(self):
        block = hstack([random_matrix(Z, random.Random(1), 2, 5, 2), DenseMatrix.identity(Z, 2)])
        X = parse_matrix(self.call('solve', self.B, self.A, '--with-params', self.write('T.mat', block)), Z)
        self.assertEqual(fixture('B').multiply(X), fixture('A'))
        with self.assertRaises(CommandError) as ctx:
            self.call('solve', self.B, self.A, '--with-params', self.write('bad.mat', DenseMatrix.zeros(Z, 3, 7)))
        self.assertEqual(ctx.exception.returncode, 2)

    def test_solve_right(self):
        B = ints([[1, 2], [0, 1]])
        A = ints([[3, 4], [5, 6]])
        X = parse_matrix(self.call('solve', self.write('B.mat', B), self.write('A.mat', A), '--right'), Z)
        self.assertEqual(X.multiply(B), A)

    def test_solve_json(self):
        payload = json.loads(self.call('solve', self.B, self.A, '--lcm', '--json'))
        self.assertTrue(payload['solvable'])
        self.assertEqual((payload['n'], payload['k'], payload['t']), (7, 3, 5))
        self.assertIsNone(payload['failing_cell'])
        self.assertEqual(payload['X']['rows'], 7)
        self.assertEqual(len(payload['X']['entries'][0]), 7)

    def test_unsolvable(self):
        B = self.write('B.mat', ints([[2, 0], [0, 2]]))
        A = self.write('A.mat', DenseMatrix.identity(Z, 2))
        code, out, err = self.run_cli('solve', B, A)
        self.assertEqual(code, 1)
        self.assertIn('(1, 1)', err)

        code, out, _ = self.run_cli('solve', B, A, '--json')
        self.assertEqual(code, 1)
        payload = json.loads(out)
        self.assertFalse(payload['solvable'])
        self.assertEqual(payload['failing_cell'], [1, 1])
        self.assertIsNone(payload['X'])

    def test_gcd_and_lcm_commands(self):
        F = parse_matrix(self.call('gcd', self.B, self.A), Z)
        self.assertTrue(mutually_associate(F, fixture('gcd')))
        N = parse_matrix(self.call('lcm', self.B, self.A), Z)
        self.assertTrue(mutually_associate(N, fixture('lcm')))
        text = self.call('lcm', self.B, self.A, '--projector')
        self.assertIn('# N\n', text)
        self.assertIn('# K\n', text)
        payload = json.loads(self.call('lcm', self.B, self.A, '--projector', '--json'))
        self.assertEqual(set(payload), {'F', 'N', 'K'})

    def test_annihilator_command(self):
        Z1 = parse_matrix(self.call('annihilator', self.B), Z)
        self.assertTrue(fixture('B').multiply(Z1).is_zero())
        D = self.write('D.mat', random_matrix(Z, random.Random(2), 2, 7, 3))
        Z2 = parse_matrix(self.call('annihilator', self.B, '--with-params', D), Z)
        self.assertTrue(fixture('B').multiply(Z2).is_zero())

    def test_divides_command(self):
        code, out, _ = self.run_cli('divides', self.B, self.A, '--witness')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('# left divides: true\n# W\n'))
        W = parse_matrix(out, Z)
        self.assertEqual(fixture('B').multiply(W), fixture('A'))

        B = self.write('B.mat', ints([[2, 0], [0, 2]]))
        A = self.write('A.mat', DenseMatrix.identity(Z, 2))
        code, out, _ = self.run_cli('divides', B, A)
        self.assertEqual(code, 1)
        self.assertIn('false', out)

        code, out, _ = self.run_cli('divides', str(FIXTURES / 'example_gcd.mat'),
                                    str(FIXTURES / 'example_lcm.mat'), '--right', '--json', '--witness')
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertTrue(payload['divides'])
        self.assertEqual(payload['side'], 'right')
        self.assertEqual(payload['witness']['rows'], 7)

    def test_make_instance(self):
        out_dir = self.dir / 'instance'
        self.call('make_instance', str(out_dir), '--size', '4', '--seed', '3')
        B = read_matrix(out_dir / 'B.mat', Z)
        A = read_matrix(out_dir / 'A.mat', Z)
        C = read_matrix(out_dir / 'C.mat', Z)
        self.assertEqual(B.multiply(C), A)
        code, _, _ = self.run_cli('solve', str(out_dir / 'B.mat'), str(out_dir / 'A.mat'))
        self.assertEqual(code, 0)

    def test_make_instance_polynomial(self):
        out_dir = self.dir / 'poly'
        self.call('make_instance', str(out_dir), '--size', '2', '--ring', 'polyq', '--seed', '5')
        B = read_matrix(out_dir / 'B.mat', QX)
        A = read_matrix(out_dir / 'A.mat', QX)
        self.assertTrue(certify(B, A).solvable)

    def test_usage_and_parse_errors(self):
        self.assertEqual(self.run_cli()[0], 2)
        self.assertEqual(self.run_cli('frobnicate')[0], 2)
        self.assertEqual(self.run_cli('solve', self.B)[0], 2)
        self.assertEqual(self.run_cli('solve', self.B, self.A, '--gcd', '--lcm')[0], 2)

        broken = self.dir / 'broken.mat'
        broken.write_text('2 2\n1 2\n3 x\n', encoding='utf-8')
        code, _, err = self.run_cli('solve', str(broken), str(broken))
        self.assertEqual(code, 2)
        self.assertIn('line 3, column 3', err)

        undecodable = self.dir / 'undecodable.mat'
        undecodable.write_bytes(b'2 2\n1 2\n0 \xff\n')
        code, out, err = self.run_cli('solve', str(undecodable), str(undecodable))
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('line 3, column 3', err)

        arabic = self.dir / 'arabic.mat'
        arabic.write_text('1 1\n٣\n', encoding='utf-8')
        code, _, err = self.run_cli('solve', str(arabic), str(arabic))
        self.assertEqual(code, 2)
        self.assertIn('line 2, column 1', err)

        code, _, _ = self.run_cli('solve', str(self.dir / 'missing.mat'), self.A)
        self.assertEqual(code, 2)

        code, _, _ = self.run_cli('solve', self.write('B.mat', DenseMatrix.identity(Z, 2)), self.A)
        self.assertEqual(code, 2)

        code, _, _ = self.run_cli('solve', self.B, self.A, '--ring', 'polyq')
        self.assertEqual(code, 2)

    def test_cli_success_and_determinism(self):
        first = self.run_cli('solve', self.B, self.A, '--gcd')
        second = self.run_cli('solve', self.B, self.A, '--gcd')
        self.assertEqual(first[0], 0)
        self.assertEqual(first, second)
