import io
import json
import random
from pathlib import Path

from django.core.management import call_command
from django.test import SimpleTestCase

from matrices.fileformat import read_matrix
from matrices.generators import random_matrix, random_unimodular
from matrices.matrix import DenseMatrix, hstack
from rings.domains import INTEGERS, RATIONAL_POLYNOMIALS

from .elimination import EliminationBuffer
from .exceptions import SmithInvariantError
from .hermite import hermite_col
from .smith import SmithDecomposition, _pick_pivot, invariant_factors, smith

Z = INTEGERS
QX = RATIONAL_POLYNOMIALS
FIXTURES = Path(__file__).resolve().parent.parent / 'equations' / 'fixtures'


def ints(rows):
    return DenseMatrix.from_ints(Z, rows)


def poly(*coefficients):
    return QX.from_coefficients(coefficients)


class SmithTest(SimpleTestCase):

    def setUp(self):
        self.A = read_matrix(FIXTURES / 'example_A.mat', Z)
        self.B = read_matrix(FIXTURES / 'example_B.mat', Z)

    def test_example_factors(self):
        snf_a = smith(self.A).check(self.A)
        self.assertEqual(snf_a.inv_factors, (1, 2, 6))
        self.assertEqual(snf_a.rank, 3)
        snf_b = smith(self.B).check(self.B)
        self.assertEqual(snf_b.inv_factors, (1, 1, 2, 4, 12))
        self.assertEqual(snf_b.rank, 5)

    def test_zero_matrix(self):
        zero = DenseMatrix.zeros(Z, 3, 3)
        snf = smith(zero).check(zero)
        self.assertEqual(snf.inv_factors, ())
        self.assertEqual(snf.rank, 0)
        self.assertTrue(snf.E.is_zero())

    def test_divisibility_fix_up(self):
        # diag(2, 3) 는 대각이지만 2 가 3 을 나누지 않으므로 (1, 6) 이 되어야 합니다
        m = ints([[2, 0], [0, 3]])
        self.assertEqual(smith(m).check(m).inv_factors, (1, 6))

    def test_random_decompositions_hold_invariants(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(1, 6)
            m = random_matrix(Z, rng, n, n)
            with self.subTest(m=m):
                snf = smith(m)
                self.assertEqual(snf.violations(m), [])
                self.assertEqual(list(snf.inv_factors), invariant_factors(m))
                self.assertTrue(snf.P.is_unimodular())
                self.assertTrue(snf.Q.is_unimodular())

    def test_polynomial_decompositions(self):
        x = poly(0, 1)
        m = DenseMatrix.from_rows(QX, [[x, QX.zero], [QX.zero, poly(1, 1)]])
        self.assertEqual(smith(m).check(m).inv_factors, (QX.one, poly(0, 1, 1)))

        rng = random.Random(2)
        for _ in range(15):
            n = rng.randint(1, 3)
            m = random_matrix(QX, rng, n, n, 3, 2)
            with self.subTest(m=m):
                snf = smith(m)
                self.assertEqual(snf.violations(m), [])
                for factor in snf.inv_factors:
                    self.assertEqual(QX.canonical(factor), factor)

    def test_polynomial_pivot_ties_use_canonical_order(self):
        # 차수가 같으면 monic 계수 순서로, 그 다음 (행, 열) 순서로 고릅니다
        m = DenseMatrix.from_rows(QX, [[poly(2, 1), QX.zero], [QX.zero, poly(2, 2)]])
        self.assertEqual(_pick_pivot(EliminationBuffer(m), 0), (1, 1))
        m = DenseMatrix.from_rows(QX, [[poly(2, 2), QX.zero], [QX.zero, poly(1, 1)]])
        self.assertEqual(_pick_pivot(EliminationBuffer(m), 0), (0, 0))
        m = DenseMatrix.from_rows(QX, [[poly(1, 1), poly(0, 1)], [poly(0, 0, 1), poly(2, 1)]])
        self.assertEqual(_pick_pivot(EliminationBuffer(m), 0), (0, 1))

    def test_check_reports_broken_chain(self):
        m = ints([[2, 0], [0, 3]])
        identity = DenseMatrix.identity(Z, 2)
        broken = SmithDecomposition(P=identity, Pinv=identity, inv_factors=(2, 3),
                                    Q=identity, Qinv=identity, rank=2)
        with self.assertRaises(SmithInvariantError) as ctx:
            broken.check(m)
        self.assertIn('factor 1 does not divide factor 2', ctx.exception.violations)


class InvariantFactorsTest(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(invariant_factors(ints([[4, 0], [0, 6]])), [2, 12])
        self.assertEqual(invariant_factors(DenseMatrix.identity(Z, 3)), [1, 1, 1])
        A = read_matrix(FIXTURES / 'example_A.mat', Z)
        B = read_matrix(FIXTURES / 'example_B.mat', Z)
        self.assertEqual(invariant_factors(hstack([A, B])), [1, 1, 2, 4, 12])

    def test_invariant_under_unimodular_action(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(1, 5)
            m = random_matrix(Z, rng, n, n)
            left, right = random_unimodular(Z, rng, n), random_unimodular(Z, rng, n)
            with self.subTest(m=m):
                self.assertEqual(invariant_factors(left.multiply(m).multiply(right)), invariant_factors(m))


class HermiteTest(SimpleTestCase):

    def assertHermite(self, m, decomposition):
        self.assertEqual(m.multiply(decomposition.W), decomposition.H)
        self.assertTrue(decomposition.W.is_unimodular())

    def test_identity(self):
        identity = DenseMatrix.identity(Z, 3)
        decomposition = hermite_col(identity)
        self.assertEqual(decomposition.H, identity)
        self.assertEqual(decomposition.W, identity)
        self.assertEqual(decomposition.pivot_rows, (0, 1, 2))

    def test_small_example(self):
        m = ints([[2, 4], [0, 6]])
        decomposition = hermite_col(m)
        self.assertHermite(m, decomposition)
        self.assertEqual(decomposition.H, ints([[2, 0], [0, 6]]))

    def test_reduces_entries_left_of_pivots(self):
        m = ints([[1, 0], [5, 3]])
        decomposition = hermite_col(m)
        self.assertHermite(m, decomposition)
        self.assertEqual(decomposition.H, ints([[1, 0], [2, 3]]))

    def test_column_permutation_gives_same_form(self):
        m = ints([[3, 1, 4], [1, 5, 9], [2, 6, 5]])
        swapped = ints([[4, 3, 1], [9, 1, 5], [5, 2, 6]])
        self.assertEqual(hermite_col(m).H, hermite_col(swapped).H)

    def test_canonical_under_column_scrambles(self):
        rng = random.Random(12)
        for ring, degree, count in ((Z, 0, 40), (QX, 1, 10)):
            for _ in range(count):
                rows, cols = rng.randint(1, 4), rng.randint(1, 4)
                m = random_matrix(ring, rng, rows, cols, 4, degree)
                first = m.multiply(random_unimodular(ring, rng, cols, degree=degree))
                second = m.multiply(random_unimodular(ring, rng, cols, degree=degree))
                with self.subTest(ring=ring.name, m=m):
                    decomposition = hermite_col(first)
                    self.assertHermite(first, decomposition)
                    self.assertEqual(decomposition.H, hermite_col(second).H)

    def test_rank_deficient(self):
        m = ints([[2, 4], [1, 2]])
        decomposition = hermite_col(m)
        self.assertHermite(m, decomposition)
        self.assertEqual(decomposition.rank, 1)
        self.assertTrue(decomposition.H.block(0, 2, 1, 2).is_zero())


class NormalFormCommandTest(SimpleTestCase):

    def test_snf_prints_named_blocks(self):
        out = io.StringIO()
        call_command('snf', str(FIXTURES / 'example_A.mat'), stdout=out)
        text = out.getvalue()
        self.assertTrue(text.startswith('# P\n7 7\n'))
        self.assertIn('# E\n7 7\n1 0 0 0 0 0 0\n0 2 0 0 0 0 0\n0 0 6 0 0 0 0\n', text)
        self.assertIn('# Q\n', text)
        self.assertNotIn('# Pinv', text)

    def test_snf_inverses_and_json(self):
        out = io.StringIO()
        call_command('snf', str(FIXTURES / 'example_B.mat'), '--inverses', stdout=out)
        self.assertIn('# Qinv\n', out.getvalue())

        out = io.StringIO()
        call_command('snf', str(FIXTURES / 'example_B.mat'), '--json', stdout=out)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['inv_factors'], ['1', '1', '2', '4', '12'])
        self.assertEqual(payload['rank'], 5)
        self.assertEqual(payload['E']['rows'], 7)

    def test_hnf(self):
        out = io.StringIO()
        call_command('hnf', str(FIXTURES / 'example_A.mat'), stdout=out)
        self.assertIn('# H\n', out.getvalue())
        self.assertIn('# W\n', out.getvalue())

    def test_output_is_deterministic(self):
        outputs = []
        for _ in range(2):
            out = io.StringIO()
            call_command('snf', str(FIXTURES / 'example_B.mat'), '--inverses', stdout=out)
            outputs.append(out.getvalue())
        self.assertEqual(outputs[0], outputs[1])
