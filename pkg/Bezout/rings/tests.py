import importlib
import random

from django.test import SimpleTestCase
from sympy import Rational

from .domains import INTEGERS, RATIONAL_POLYNOMIALS, get_ring
from .exceptions import DivisionByZero, NotDivisible, ScalarParseError

Z = INTEGERS
QX = RATIONAL_POLYNOMIALS


def poly(*coefficients):
    return QX.from_coefficients(coefficients)


class IntegerRingTest(SimpleTestCase):

    def test_ext_gcd_examples(self):
        triple = Z.ext_gcd(12, 18)
        self.assertEqual(triple.g, 6)
        self.assertEqual(triple.u * 12 + triple.v * 18, 6)

        triple = Z.ext_gcd(0, -5)
        self.assertEqual(triple.g, 5)
        self.assertEqual(triple.v * -5, 5)

        self.assertEqual(Z.ext_gcd(0, 0).g, 0)

    def test_ext_gcd_bezout_identity(self):
        rng = random.Random(11)
        for _ in range(200):
            a, b = rng.randint(-500, 500), rng.randint(-500, 500)
            with self.subTest(a=a, b=b):
                t = Z.ext_gcd(a, b)
                self.assertEqual(t.u * a + t.v * b, t.g)
                self.assertGreaterEqual(t.g, 0)
                if t.g:
                    self.assertEqual(a % t.g, 0)
                    self.assertEqual(b % t.g, 0)

    def test_normalize(self):
        self.assertEqual(Z.normalize(-6), (6, -1))
        self.assertEqual(Z.normalize(6), (6, 1))
        self.assertEqual(Z.normalize(0), (0, 1))

    def test_exact_div(self):
        self.assertEqual(Z.exact_div(12, -4), -3)
        with self.assertRaises(NotDivisible):
            Z.exact_div(7, 2)
        with self.assertRaises(DivisionByZero):
            Z.exact_div(3, 0)

    def test_divides(self):
        self.assertTrue(Z.divides(3, 12))
        self.assertFalse(Z.divides(5, 12))
        self.assertTrue(Z.divides(0, 0))
        self.assertFalse(Z.divides(0, 1))
        self.assertTrue(Z.divides(7, 0))

    def test_parse_and_format(self):
        self.assertEqual(Z.parse('-42'), -42)
        self.assertEqual(Z.format(-42), '-42')
        for literal in ('1.5', '[1,2]', 'x', '+3'):
            with self.subTest(literal=literal), self.assertRaises(ScalarParseError):
                Z.parse(literal)

    def test_reduce_quotient_gives_nonnegative_remainder(self):
        for a in (-7, -1, 0, 5, 13):
            q = Z.reduce_quotient(a, 4)
            self.assertIn(a - q * 4, range(4))


class RationalPolynomialRingTest(SimpleTestCase):

    def test_ext_gcd_is_monic(self):
        # (x^2 - 1) 과 (x^2 + 2x + 1) 의 gcd 는 x + 1
        a = poly(-1, 0, 1)
        b = poly(1, 2, 1)
        t = QX.ext_gcd(a, b)
        self.assertEqual(t.g, poly(1, 1))
        self.assertEqual(t.u * a + t.v * b, t.g)

    def test_ext_gcd_with_zero(self):
        t = QX.ext_gcd(QX.zero, poly(0, 4))
        self.assertEqual(t.g, poly(0, 1))
        self.assertEqual(t.v * poly(0, 4), t.g)
        self.assertTrue(QX.is_zero(QX.ext_gcd(QX.zero, QX.zero).g))

    def test_ext_gcd_random(self):
        rng = random.Random(5)
        for _ in range(50):
            a = QX.random_element(rng, 4, 3)
            b = QX.random_element(rng, 4, 3)
            with self.subTest(a=QX.format(a), b=QX.format(b)):
                t = QX.ext_gcd(a, b)
                self.assertEqual(t.u * a + t.v * b, t.g)
                if not QX.is_zero(t.g):
                    self.assertEqual(QX.canonical(t.g), t.g)
                    self.assertTrue(QX.divides(t.g, a))
                    self.assertTrue(QX.divides(t.g, b))

    def test_constants_are_units(self):
        self.assertTrue(QX.is_unit(QX.constant(2)))
        self.assertFalse(QX.is_unit(poly(0, 1)))
        self.assertFalse(QX.is_unit(QX.zero))
        self.assertEqual(QX.unit_inverse(QX.constant(2)) * QX.constant(2), QX.one)

    def test_normalize(self):
        canonical, unit = QX.normalize(poly(2, -4))
        self.assertEqual(canonical, poly(Rational(-1, 2), 1))
        self.assertEqual(canonical * unit, poly(2, -4))

    def test_exact_div(self):
        self.assertEqual(QX.exact_div(poly(-1, 0, 1), poly(1, 1)), poly(-1, 1))
        with self.assertRaises(NotDivisible):
            QX.exact_div(poly(1, 0, 1), poly(1, 1))
        with self.assertRaises(DivisionByZero):
            QX.exact_div(poly(1), QX.zero)

    def test_parse_and_format(self):
        self.assertEqual(QX.parse('[1,0,-1/2]'), poly(1, 0, Rational(-1, 2)))
        self.assertEqual(QX.format(poly(1, 0, Rational(-1, 2))), '[1,0,-1/2]')
        self.assertEqual(QX.format(QX.zero), '[0]')
        self.assertEqual(QX.parse('[0,0]'), QX.zero)

    def test_parse_errors_carry_offset(self):
        with self.assertRaises(ScalarParseError):
            QX.parse('3')
        with self.assertRaises(ScalarParseError):
            QX.parse('[]')
        with self.assertRaises(ScalarParseError) as ctx:
            QX.parse('[1,a]')
        self.assertEqual(ctx.exception.column, 3)
        with self.assertRaises(ScalarParseError):
            QX.parse('[1/0]')

    def test_pivot_key_breaks_degree_ties(self):
        self.assertLess(QX.pivot_key(poly(1, 1)), QX.pivot_key(poly(2, 1)))
        self.assertLess(QX.pivot_key(poly(5, 0, 1)), QX.pivot_key(poly(0, 1, 1)))
        self.assertEqual(QX.pivot_key(poly(2, 2)), QX.pivot_key(poly(1, 1)))
        self.assertLess(QX.pivot_key(poly(9)), QX.pivot_key(poly(0, 1)))

    def test_parse_rejects_non_ascii_digits(self):
        with self.assertRaises(ScalarParseError):
            QX.parse('[1,٣]')


class IntegerLiteralTest(SimpleTestCase):

    def test_parse_rejects_non_ascii_digits(self):
        for literal in ('٣', '-٣', '1٣', '７'):
            with self.subTest(literal=literal):
                with self.assertRaises(ScalarParseError):
                    Z.parse(literal)


class ModuleImportTest(SimpleTestCase):

    def test_every_app_module_imports(self):
        for name in ('rings.domains', 'matrices.matrix', 'matrices.fileformat', 'normal_forms.smith',
                     'normal_forms.hermite', 'equations.solver', 'equations.gcd_lcm',
                     'oracle.hnf_solver', 'oracle.battery', 'Bezout.cli'):
            with self.subTest(module=name):
                self.assertIsNotNone(importlib.import_module(name))

    def test_igcdex_is_wired(self):
        triple = Z.ext_gcd(240, 46)
        self.assertEqual((triple.g, triple.u * 240 + triple.v * 46), (2, 2))


class RingRegistryTest(SimpleTestCase):

    def test_get_ring(self):
        self.assertIs(get_ring('int'), INTEGERS)
        self.assertIs(get_ring('polyq'), RATIONAL_POLYNOMIALS)
        with self.assertRaises(ValueError):
            get_ring('gaussian')
