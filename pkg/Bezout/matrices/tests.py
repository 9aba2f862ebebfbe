import random
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from rings.domains import INTEGERS, RATIONAL_POLYNOMIALS

from .exceptions import DimensionMismatch, MatrixParseError
from .fileformat import decode_text, format_matrix, format_named, parse_matrix, read_matrix, write_matrix
from .generators import random_matrix, random_unimodular, random_unimodular_pair
from .matrix import DenseMatrix, block_compose, block_extract, determinant, hstack, vstack
from .serializers import CliConfigSerializer, MatrixSerializer

Z = INTEGERS
QX = RATIONAL_POLYNOMIALS


def ints(rows):
    return DenseMatrix.from_ints(Z, rows)


class DenseMatrixTest(SimpleTestCase):

    def test_constructors(self):
        self.assertEqual(DenseMatrix.identity(Z, 2), ints([[1, 0], [0, 1]]))
        self.assertEqual(DenseMatrix.zeros(Z, 2, 3).shape, (2, 3))
        self.assertEqual(DenseMatrix.diagonal(Z, [4, 6], 2, 3), ints([[4, 0, 0], [0, 6, 0]]))
        with self.assertRaises(DimensionMismatch):
            DenseMatrix.from_rows(Z, [[1, 2], [3]])
        with self.assertRaises(DimensionMismatch):
            DenseMatrix(Z, 2, 2, [1, 2, 3])

    def test_arithmetic(self):
        m = ints([[1, 2], [3, 4]])
        self.assertEqual(m + m, m.scale(2))
        self.assertTrue((m - m).is_zero())
        self.assertEqual(-m, m.scale(-1))
        self.assertEqual(m.multiply(ints([[0, 1], [1, 0]])), ints([[2, 1], [4, 3]]))
        self.assertEqual(m @ DenseMatrix.identity(Z, 2), m)
        self.assertEqual(m.transpose(), ints([[1, 3], [2, 4]]))
        with self.assertRaises(DimensionMismatch):
            m.multiply(DenseMatrix.zeros(Z, 3, 1))
        with self.assertRaises(DimensionMismatch):
            m + DenseMatrix.zeros(Z, 2, 3)

    def test_multiply_is_associative_and_distributive(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(1, 5)
            a, b, c = (random_matrix(Z, rng, n, n) for _ in range(3))
            with self.subTest(n=n):
                self.assertEqual(a.multiply(b).multiply(c), a.multiply(b.multiply(c)))
                self.assertEqual(a.multiply(b + c), a.multiply(b) + a.multiply(c))

    def test_determinant(self):
        self.assertEqual(determinant(ints([[2, 0], [0, 3]])), 6)
        self.assertEqual(determinant(DenseMatrix.zeros(Z, 0, 0)), 1)
        # 4x4 는 Bareiss 소거, 첫 피벗이 0 이라 행 교환이 필요합니다
        m = ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]])
        self.assertEqual(determinant(m), -1)
        with self.assertRaises(DimensionMismatch):
            determinant(DenseMatrix.zeros(Z, 2, 3))

    def test_determinant_is_multiplicative(self):
        rng = random.Random(8)
        for _ in range(30):
            n = rng.randint(1, 5)
            a, b = random_matrix(Z, rng, n, n), random_matrix(Z, rng, n, n)
            with self.subTest(n=n):
                self.assertEqual(determinant(a.multiply(b)), determinant(a) * determinant(b))

    def test_determinant_over_polynomials(self):
        x = QX.from_coefficients([0, 1])
        m = DenseMatrix.from_rows(QX, [[x, QX.one], [QX.one, x]])
        self.assertEqual(determinant(m), QX.from_coefficients([-1, 0, 1]))

    def test_is_unimodular(self):
        self.assertFalse(ints([[1, 0], [0, 2]]).is_unimodular())
        self.assertTrue(ints([[1, 5], [0, -1]]).is_unimodular())
        two = QX.constant(2)
        self.assertTrue(DenseMatrix.diagonal(QX, [two, QX.one]).is_unimodular())

    def test_block_compose_and_extract(self):
        a = ints([[1, 2], [3, 4]])
        b = ints([[5], [6]])
        c = ints([[7, 8]])
        d = ints([[9]])
        whole = block_compose([[a, b], [c, d]])
        self.assertEqual(whole, ints([[1, 2, 5], [3, 4, 6], [7, 8, 9]]))
        self.assertEqual(block_extract(whole, 0, 2, 0, 2), a)
        self.assertEqual(block_extract(whole, 0, 2, 2, 3), b)
        self.assertEqual(block_extract(whole, 2, 3, 0, 2), c)
        self.assertEqual(block_extract(whole, 2, 3, 2, 3), d)
        self.assertEqual(block_compose([[a]]), a)
        with self.assertRaises(DimensionMismatch):
            block_compose([[a, c]])

    def test_zero_size_blocks(self):
        a = ints([[1, 2], [3, 4]])
        empty_rows = DenseMatrix.zeros(Z, 0, 2)
        empty_cols = DenseMatrix.zeros(Z, 2, 0)
        self.assertEqual(vstack([a, empty_rows]), a)
        self.assertEqual(hstack([empty_cols, a]), a)
        self.assertEqual(block_compose([[a, empty_cols], [empty_rows, DenseMatrix.zeros(Z, 0, 0)]]), a)


class MatrixFileFormatTest(SimpleTestCase):

    def test_parse_with_comments_and_blank_lines(self):
        text = '# P\n\n2 2\n1 -3\n\n# 중간 주석\n0 4\n'
        self.assertEqual(parse_matrix(text, Z), ints([[1, -3], [0, 4]]))

    def test_format(self):
        m = ints([[1, -3], [0, 4]])
        self.assertEqual(format_matrix(m), '2 2\n1 -3\n0 4\n')
        self.assertEqual(format_named('E', m), '# E\n2 2\n1 -3\n0 4\n')
        self.assertEqual(format_matrix(DenseMatrix.zeros(Z, 2, 0)), '2 0\n')
        self.assertEqual(parse_matrix('2 0\n', Z), DenseMatrix.zeros(Z, 2, 0))

    def test_parse_then_print_is_identity(self):
        rng = random.Random(21)
        for ring, degree in ((Z, 0), (QX, 2)):
            for _ in range(10):
                m = random_matrix(ring, rng, rng.randint(1, 4), rng.randint(1, 4), 5, degree)
                with self.subTest(ring=ring.name):
                    self.assertEqual(parse_matrix(format_matrix(m), ring), m)

    def test_errors_report_line_and_column(self):
        cases = [
            ('2 2\n1 x\n0 4\n', Z, 2, 3),
            ('2 2\n1 2 3\n0 4\n', Z, 2, 5),
            ('2 2\n1 2\n', Z, 3, 1),
            ('2\n', Z, 1, 2),
            ('2 2\n1 2\n3 4\n5 6\n', Z, 4, 1),
            ('1 2\n[1,0] [1,a]\n', QX, 2, 10),
            ('٢ 2\n1 2\n3 4\n', Z, 1, 1),
            ('1 1\n٣\n', Z, 2, 1),
        ]
        for text, ring, line, column in cases:
            with self.subTest(text=text):
                with self.assertRaises(MatrixParseError) as ctx:
                    parse_matrix(text, ring, source='m.mat')
                self.assertEqual((ctx.exception.line, ctx.exception.column), (line, column))
                self.assertIn(f'm.mat: line {line}, column {column}', str(ctx.exception))

    def test_invalid_utf8_reports_position(self):
        with self.assertRaises(MatrixParseError) as ctx:
            decode_text(b'1 1\n\xc3\xa9 \xff\n', 'm.mat')
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 3))
        self.assertEqual(decode_text('1 1\n٣\n'.encode('utf-8')), '1 1\n٣\n')

        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.mat'
            path.write_bytes(b'\xfe1 1\n1\n')
            with self.assertRaises(MatrixParseError) as ctx:
                read_matrix(path, Z)
            self.assertEqual((ctx.exception.line, ctx.exception.column), (1, 1))

    def test_mixed_ring_files_are_rejected(self):
        with self.assertRaises(MatrixParseError):
            parse_matrix('1 2\n[1] [0,1]\n', Z)
        with self.assertRaises(MatrixParseError):
            parse_matrix('1 2\n1 2\n', QX)

    def test_read_and_write(self):
        m = ints([[5, 0], [1, 2]])
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'm.mat'
            write_matrix(path, m, header='M')
            self.assertTrue(path.read_text(encoding='utf-8').startswith('# M\n'))
            self.assertEqual(read_matrix(path, Z), m)


class GeneratorTest(SimpleTestCase):

    def test_random_unimodular_pair(self):
        rng = random.Random(1)
        for ring, degree in ((Z, 0), (QX, 1)):
            for n in range(1, 6):
                with self.subTest(ring=ring.name, n=n):
                    w, w_inv = random_unimodular_pair(ring, rng, n, steps=8, degree=degree)
                    self.assertEqual(w.multiply(w_inv), DenseMatrix.identity(ring, n))
                    self.assertTrue(w.is_unimodular())

    def test_random_matrix_is_seeded(self):
        first = random_matrix(Z, random.Random(4), 3, 3)
        second = random_matrix(Z, random.Random(4), 3, 3)
        self.assertEqual(first, second)
        self.assertEqual(random_unimodular(Z, random.Random(4), 3), random_unimodular(Z, random.Random(4), 3))


class MatrixSerializerTest(SimpleTestCase):

    def test_representation(self):
        m = ints([[1, -3], [0, 4]])
        self.assertEqual(MatrixSerializer(m).data, {'rows': 2, 'cols': 2, 'entries': [['1', '-3'], ['0', '4']]})

    def test_polynomial_representation(self):
        m = DenseMatrix.from_rows(QX, [[QX.zero, QX.from_coefficients([1, 2])]])
        self.assertEqual(MatrixSerializer(m).data['entries'], [['[0]', '[1,2]']])


class CliConfigSerializerTest(SimpleTestCase):

    def test_defaults(self):
        serializer = CliConfigSerializer(data={'ring': 'int'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertIs(serializer.validated_data['ring'], Z)
        self.assertEqual(serializer.validated_data['seed'], 7)
        self.assertFalse(serializer.validated_data['json'])

    def test_rejects_bad_values(self):
        self.assertFalse(CliConfigSerializer(data={'ring': 'real'}).is_valid())
        self.assertFalse(CliConfigSerializer(data={'ring': 'int', 'trials': 0}).is_valid())
