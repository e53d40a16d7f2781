"""
Exact polynomials on the matrix triple C^{r x s} (the ball is r = 1) and the
Fischer-Fock pairing (p|q) = (q*(d)p)(0), under which monomials are
orthogonal with norms alpha! = prod alpha_ab!.

Coefficients are exact rationals (fractions.Fraction) or any number type
with conjugate(); exponents are stored row-major as tuples of length r*s.
Coordinates are 0-based in the API and printed 1-based (z11, z12, ...).
"""

# pylint: disable=invalid-name

from __future__ import division

import math
from fractions import Fraction
from itertools import permutations

from HyperToepClient.ClientExceptions import ParameterException
from HyperToepClient.ClientUtilities import toExact


def conjugate(value):
    return value.conjugate()


def exponentFactorial(exponent):
    result = 1
    for e in exponent:
        result *= math.factorial(e)
    return result


def permutationSign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


class MatrixPoly(object):
    """
    _MatrixPoly_

    Finitely supported map exponent -> coefficient. Zero coefficients are
    dropped; instances are not modified after construction.
    """

    def __init__(self, shape, coeffs=None):
        r, s = shape
        if r < 0 or s < 0:
            raise ParameterException("Invalid matrix shape %s" % (shape,))
        self.shape = (r, s)
        self.coeffs = {}
        for exponent, value in (coeffs or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != r * s or any(e < 0 for e in exponent):
                raise ParameterException("Exponent %s does not fit the shape %s" % (exponent, shape))
            if value != 0:
                self.coeffs[exponent] = self.coeffs.get(exponent, 0) + value
                if self.coeffs[exponent] == 0:
                    del self.coeffs[exponent]

    ## constructors

    @classmethod
    def constant(cls, shape, value):
        return cls(shape, {(0,) * (shape[0] * shape[1]): toExact(value)})

    @classmethod
    def zero(cls, shape):
        return cls(shape)

    @classmethod
    def monomial(cls, shape, exponent, value=1):
        return cls(shape, {tuple(exponent): toExact(value)})

    @classmethod
    def coordinate(cls, shape, i, j):
        """ z_ij, 0-based """
        r, s = shape
        if not (0 <= i < r and 0 <= j < s):
            raise ParameterException("Coordinate (%d, %d) outside the shape %s" % (i + 1, j + 1, shape))
        exponent = [0] * (r * s)
        exponent[i * s + j] = 1
        return cls(shape, {tuple(exponent): Fraction(1)})

    @classmethod
    def linearForm(cls, shape, v):
        """ z -> (z|v) = sum z_ab conj(v_ab), v given as an r x s nested list """
        r, s = shape
        result = cls.zero(shape)
        for i in range(r):
            for j in range(s):
                if v[i][j] != 0:
                    result = result + cls.coordinate(shape, i, j) * conjugate(toExact(v[i][j]))
        return result

    @classmethod
    def minor(cls, shape, rows, cols):
        """ Determinant of the submatrix z[rows, cols] (Leibniz expansion) """
        if len(rows) != len(cols):
            raise ParameterException("A minor needs as many rows as columns")
        r, s = shape
        result = {}
        for perm in permutations(range(len(rows))):
            exponent = [0] * (r * s)
            for k, pk in enumerate(perm):
                exponent[rows[k] * s + cols[pk]] += 1
            exponent = tuple(exponent)
            result[exponent] = result.get(exponent, 0) + permutationSign(perm)
        return cls(shape, result)

    ## arithmetic

    def _check(self, other):
        if not isinstance(other, MatrixPoly):
            raise ParameterException("Cannot combine a polynomial with %r" % (other,))
        if other.shape != self.shape:
            raise ParameterException("Shape mismatch %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        if not isinstance(other, MatrixPoly):
            other = MatrixPoly.constant(self.shape, other)
        self._check(other)
        result = dict(self.coeffs)
        for exponent, value in other.coeffs.items():
            result[exponent] = result.get(exponent, 0) + value
        return MatrixPoly(self.shape, result)

    __radd__ = __add__

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, factor):
        return MatrixPoly(self.shape, dict((e, v * factor) for e, v in self.coeffs.items()))

    def __mul__(self, other):
        if not isinstance(other, MatrixPoly):
            return self.scaled(other)
        self._check(other)
        result = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exponent = tuple(x + y for x, y in zip(e1, e2))
                result[exponent] = result.get(exponent, 0) + c1 * c2
        return MatrixPoly(self.shape, result)

    def __rmul__(self, other):
        return self.scaled(other)

    def __truediv__(self, other):
        return self.scaled(1 / toExact(other))

    def __pow__(self, n):
        result = MatrixPoly.constant(self.shape, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MatrixPoly):
            return self.shape == other.shape and self.coeffs == other.coeffs
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def isZero(self):
        return not self.coeffs

    ## structure

    @property
    def nvars(self):
        return self.shape[0] * self.shape[1]

    @property
    def degree(self):
        return max((sum(e) for e in self.coeffs), default=0)

    def homogeneousPart(self, n):
        return MatrixPoly(self.shape, dict((e, v) for e, v in self.coeffs.items() if sum(e) == n))

    def truncated(self, maxDegree):
        return MatrixPoly(self.shape, dict((e, v) for e, v in self.coeffs.items() if sum(e) <= maxDegree))

    def degrees(self):
        return sorted(set(sum(e) for e in self.coeffs))

    def weightOf(self, exponent):
        """ (row sums, column sums) of a monomial """
        r, s = self.shape
        rows = tuple(sum(exponent[i * s:(i + 1) * s]) for i in range(r))
        cols = tuple(sum(exponent[i * s + j] for i in range(r)) for j in range(s))
        return rows, cols

    def splitByWeight(self):
        parts = {}
        for exponent, value in self.coeffs.items():
            parts.setdefault(self.weightOf(exponent), {})[exponent] = value
        return dict((w, MatrixPoly(self.shape, c)) for w, c in parts.items())

    def derivative(self, i, j):
        """ d/dz_ij, 0-based """
        index = i * self.shape[1] + j
        result = {}
        for exponent, value in self.coeffs.items():
            if exponent[index]:
                lowered = list(exponent)
                lowered[index] -= 1
                result[tuple(lowered)] = value * exponent[index]
        return MatrixPoly(self.shape, result)

    def directionalDerivative(self, v):
        """ d_v p = sum v_ab d p/dz_ab, the Fischer adjoint of multiplication by (z|v) """
        r, s = self.shape
        result = MatrixPoly.zero(self.shape)
        for i in range(r):
            for j in range(s):
                if v[i][j] != 0:
                    result = result + self.derivative(i, j) * toExact(v[i][j])
        return result

    def evaluate(self, point):
        r, s = self.shape
        values = [toExact(point[i][j]) for i in range(r) for j in range(s)]
        total = 0
        for exponent, coeff in self.coeffs.items():
            term = coeff
            for x, e in zip(values, exponent):
                if e:
                    term *= x ** e
            total += term
        return total

    def coefficient(self, exponent):
        return self.coeffs.get(tuple(exponent), 0)

    def __repr__(self):
        return "MatrixPoly(%s, %s)" % (self.shape, self.describe())

    def describe(self):
        if not self.coeffs:
            return "0"
        r, s = self.shape
        terms = []
        for exponent in sorted(self.coeffs, reverse=True):
            factors = []
            for index, e in enumerate(exponent):
                if e:
                    name = "z%d%d" % (index // s + 1, index % s + 1)
                    factors.append(name if e == 1 else "%s^%d" % (name, e))
            terms.append("%s*%s" % (self.coeffs[exponent], "*".join(factors)) if factors else str(self.coeffs[exponent]))
        return " + ".join(terms)


def fischerPairing(p, q):
    """
    _fischerPairing_

    (p|q) = sum conj(p_alpha) q_alpha alpha!, conjugate-linear in p.
    """
    if p.shape != q.shape:
        raise ParameterException("Shape mismatch %s vs %s" % (p.shape, q.shape))
    if len(p.coeffs) > len(q.coeffs):
        p, q, swap = q, p, True
    else:
        swap = False
    total = Fraction(0)
    for exponent, value in p.coeffs.items():
        other = q.coeffs.get(exponent)
        if other is not None:
            term = conjugate(value) * other if not swap else value * conjugate(other)
            total += term * exponentFactorial(exponent)
    return total


def fischerNorm2(p):
    return fischerPairing(p, p)


def diagonalTripotent(shape, i):
    """ e_11 + ... + e_ii as an r x s nested list """
    r, s = shape
    if not 0 <= i <= min(r, s):
        raise ParameterException("A diagonal tripotent of rank %d does not fit the shape %s" % (i, shape))
    return [[1 if (a == b and a < i) else 0 for b in range(s)] for a in range(r)]


def restrictSymbol(f, i):
    """
    _restrictSymbol_

    f^(c)(zeta) = f(c + zeta) for c = e_11 + ... + e_ii and zeta in the
    Peirce-0 block (rows and columns > i), returned on the shape (r-i, s-i).
    """
    r, s = f.shape
    if not 0 <= i <= min(r, s):
        raise ParameterException("A diagonal tripotent of rank %d does not fit the shape %s" % (i, f.shape))
    reducedShape = (r - i, s - i)
    result = {}
    for exponent, value in f.coeffs.items():
        reduced = [0] * (reducedShape[0] * reducedShape[1])
        vanishes = False
        for index, e in enumerate(exponent):
            if not e:
                continue
            a, b = divmod(index, s)
            if a >= i and b >= i:
                reduced[(a - i) * reducedShape[1] + (b - i)] = e
            elif a != b:
                vanishes = True
                break
        if not vanishes:
            reduced = tuple(reduced)
            result[reduced] = result.get(reduced, 0) + value
    return MatrixPoly(reducedShape, result)


def embedPeirceZero(g, shape, i):
    """ Polynomial on the Peirce-0 block of e_11 + ... + e_ii, as a polynomial on the full shape """
    r, s = shape
    if g.shape != (r - i, s - i):
        raise ParameterException("Polynomial of shape %s is not on the Peirce-0 block of rank %d in %s" % (g.shape, i, shape))
    result = {}
    for exponent, value in g.coeffs.items():
        full = [0] * (r * s)
        for index, e in enumerate(exponent):
            a, b = divmod(index, s - i)
            full[(a + i) * s + (b + i)] = e
        result[tuple(full)] = value
    return MatrixPoly(shape, result)


def randomPolynomial(shape, maxDegree, rng, nterms=3):
    """ Seeded random polynomial with small rational coefficients """
    n = shape[0] * shape[1]
    coeffs = {}
    for _ in range(nterms):
        degree = int(rng.integers(0, maxDegree + 1))
        exponent = tuple(int(e) for e in rng.multinomial(degree, [1.0 / n] * n))
        coeffs[exponent] = coeffs.get(exponent, 0) + Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
    return MatrixPoly(shape, coeffs)
