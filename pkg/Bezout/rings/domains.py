"""
정확 산술이 가능한 가환 기본약수 정역(elementary divisor domain) 구현.

두 가지 구체 환을 제공합니다.
  - IntegerRing: 임의 정밀도 정수 (Python int)
  - RationalPolynomialRing: 유리수 계수 일변수 다항식 (sympy Poly, domain=QQ)

모든 원소는 불변이며, 모든 연산은 순수 함수입니다.
"""
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Tuple

from sympy import Poly, QQ, Rational, Symbol
from sympy.core.intfunc import igcdex
from sympy.polys.polyerrors import ExactQuotientFailed

from .exceptions import DivisionByZero, NotDivisible, ScalarParseError

INTEGER_LITERAL = re.compile(r'-?[0-9]+')
RATIONAL_LITERAL = re.compile(r'(-?[0-9]+)(?:/([0-9]+))?')


@dataclass(frozen=True)
class BezoutTriple:
    """u*a + v*b = g 를 만족하는 (g, u, v)"""
    g: Any
    u: Any
    v: Any


class EuclideanDomain(ABC):
    """행렬 계산이 사용하는 환 연산 인터페이스"""

    name = ''

    @property
    @abstractmethod
    def zero(self):
        ...

    @property
    @abstractmethod
    def one(self):
        ...

    @abstractmethod
    def from_int(self, value: int):
        ...

    @abstractmethod
    def ext_gcd(self, a, b) -> BezoutTriple:
        ...

    @abstractmethod
    def normalize(self, a) -> Tuple[Any, Any]:
        """(canonical, unit) 을 반환하며 canonical * unit == a"""

    @abstractmethod
    def unit_inverse(self, unit):
        ...

    @abstractmethod
    def is_unit(self, a) -> bool:
        ...

    @abstractmethod
    def pivot_key(self, a):
        """피벗 선택용 크기 (작을수록 우선)"""

    @abstractmethod
    def reduce_quotient(self, a, pivot):
        """a - q*pivot 이 pivot 에 대해 기약(reduced)이 되는 몫 q"""

    @abstractmethod
    def _quotient(self, a, b):
        ...

    @abstractmethod
    def parse(self, literal: str):
        ...

    @abstractmethod
    def format(self, a) -> str:
        ...

    @abstractmethod
    def random_element(self, rng, bound: int, degree: int = 0):
        ...

    def is_zero(self, a) -> bool:
        return a == self.zero

    def exact_div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero(a)
        return self._quotient(a, b)

    def divides(self, b, a) -> bool:
        """b | a 여부 (0 | 0 은 참으로 봅니다)"""
        if self.is_zero(b):
            return self.is_zero(a)
        try:
            self._quotient(a, b)
        except NotDivisible:
            return False
        return True

    def gcd(self, a, b):
        return self.ext_gcd(a, b).g

    def canonical(self, a):
        return self.normalize(a)[0]

    def __repr__(self):
        return f'<{self.__class__.__name__} {self.name}>'


class IntegerRing(EuclideanDomain):
    name = 'int'

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, value):
        return int(value)

    def ext_gcd(self, a, b):
        if a == 0 and b == 0:
            return BezoutTriple(0, 0, 0)
        u, v, g = igcdex(a, b)
        return BezoutTriple(int(g), int(u), int(v))

    def _quotient(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(a, b)
        return q

    def normalize(self, a):
        if a < 0:
            return -a, -1
        return a, 1

    def unit_inverse(self, unit):
        if unit not in (1, -1):
            raise NotDivisible(1, unit)
        return unit

    def is_unit(self, a):
        return a in (1, -1)

    def pivot_key(self, a):
        return (abs(a),)

    def reduce_quotient(self, a, pivot):
        # 나머지를 [0, pivot) 범위로 맞추는 floor 몫
        return a // pivot

    def parse(self, literal):
        if not INTEGER_LITERAL.fullmatch(literal):
            raise ScalarParseError(literal, 'not an integer literal')
        return int(literal)

    def format(self, a):
        return str(a)

    def random_element(self, rng, bound, degree=0):
        return rng.randint(-bound, bound)


class RationalPolynomialRing(EuclideanDomain):
    """QQ[x]: 계수는 기약분수, 분모는 양수. 정규 대표원은 monic 다항식."""

    name = 'polyq'

    def __init__(self, variable='x'):
        self.symbol = Symbol(variable)

    @property
    def zero(self):
        return Poly(0, self.symbol, domain=QQ)

    @property
    def one(self):
        return Poly(1, self.symbol, domain=QQ)

    def from_int(self, value):
        return Poly(int(value), self.symbol, domain=QQ)

    def from_coefficients(self, ascending):
        """오름차순 계수 리스트로 다항식을 만듭니다. 뒤쪽 0 계수는 제거됩니다."""
        coeffs = [Rational(c) for c in ascending] or [Rational(0)]
        return Poly(list(reversed(coeffs)), self.symbol, domain=QQ)

    def coefficients(self, a):
        """오름차순 계수 리스트 (0 다항식은 [0])"""
        return [Rational(c) for c in reversed(a.all_coeffs())]

    def constant(self, value):
        return Poly(value, self.symbol, domain=QQ)

    def is_zero(self, a):
        return a.is_zero

    def ext_gcd(self, a, b):
        if a.is_zero and b.is_zero:
            return BezoutTriple(self.zero, self.zero, self.zero)
        if a.is_zero:
            g, unit = self.normalize(b)
            return BezoutTriple(g, self.zero, self.unit_inverse(unit))
        if b.is_zero:
            g, unit = self.normalize(a)
            return BezoutTriple(g, self.unit_inverse(unit), self.zero)
        # sympy 의 gcdex 는 이미 monic gcd 를 돌려줍니다
        u, v, g = a.gcdex(b)
        return BezoutTriple(g, u, v)

    def _quotient(self, a, b):
        try:
            return a.exquo(b)
        except ExactQuotientFailed:
            raise NotDivisible(a, b)

    def normalize(self, a):
        if a.is_zero:
            return self.zero, self.one
        lead = a.LC()
        return a.monic(), self.constant(lead)

    def unit_inverse(self, unit):
        if not self.is_unit(unit):
            raise NotDivisible(self.one, unit)
        return self.constant(1 / unit.LC())

    def is_unit(self, a):
        return not a.is_zero and a.degree() == 0

    def pivot_key(self, a):
        # 차수가 같으면 monic 형태의 계수 (최고차부터) 순서
        return (a.degree(), tuple(a.monic().all_coeffs()))

    def reduce_quotient(self, a, pivot):
        q, _ = a.div(pivot)
        return q

    def parse(self, literal):
        if not (literal.startswith('[') and literal.endswith(']')):
            raise ScalarParseError(literal, 'not a polynomial literal')
        body = literal[1:-1]
        if not body:
            raise ScalarParseError(literal, 'empty coefficient list', column=1)
        coeffs = []
        offset = 1
        for part in body.split(','):
            match = RATIONAL_LITERAL.fullmatch(part)
            if not match:
                raise ScalarParseError(literal, 'bad rational coefficient', column=offset)
            numerator, denominator = match.groups()
            if denominator is not None and int(denominator) == 0:
                raise ScalarParseError(literal, 'zero denominator', column=offset)
            coeffs.append(Rational(int(numerator), int(denominator or 1)))
            offset += len(part) + 1
        return self.from_coefficients(coeffs)

    def format(self, a):
        return '[' + ','.join(str(c) for c in self.coefficients(a)) + ']'

    def random_element(self, rng, bound, degree=0):
        top = rng.randint(0, degree)
        return self.from_coefficients([rng.randint(-bound, bound) for _ in range(top + 1)])


INTEGERS = IntegerRing()
RATIONAL_POLYNOMIALS = RationalPolynomialRing()

RINGS = {
    INTEGERS.name: INTEGERS,
    RATIONAL_POLYNOMIALS.name: RATIONAL_POLYNOMIALS,
}
RING_CHOICES = [(name, name) for name in RINGS]


def get_ring(name):
    try:
        return RINGS[name]
    except KeyError:
        raise ValueError(f'unknown ring {name!r}; choose one of {sorted(RINGS)}')
