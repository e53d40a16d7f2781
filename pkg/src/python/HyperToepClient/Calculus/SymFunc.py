"""
Exact symmetric functions in a fixed number of variables, stored in the
monomial symmetric basis: Schur polynomials, Jack-type spherical polynomials
normalized at (1, ..., 1), principal specializations and the isotype
dimensions of the concrete polynomial models.
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import multiset_permutations

from HyperToepClient.ClientExceptions import ParameterException, ModelNotSupportedException, NumericalException
from HyperToepClient.ClientUtilities import toExact, CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import Partition, partitionsOf

logger = logging.getLogger(CALC_LOGGER_NAME)


def monomialCount(kappa, n):
    """ m_kappa(1^n): number of distinct permutations of kappa padded to n entries """
    padded = Partition(kappa).padded(n)
    count = math.factorial(n)
    for multiplicity in Counter(padded).values():
        count //= math.factorial(multiplicity)
    return count


@lru_cache(maxsize=None)
def monomialExponents(kappa, n):
    return tuple(tuple(perm) for perm in multiset_permutations(list(Partition(kappa).padded(n))))


class SymPoly(object):
    """
    _SymPoly_

    Symmetric polynomial in nvars variables, sum of coeffs[kappa] * m_kappa.
    Zero coefficients are never stored. Instances are not modified after
    construction.
    """

    def __init__(self, nvars, coeffs=None):
        self.nvars = nvars
        self.coeffs = {}
        for kappa, value in (coeffs or {}).items():
            kappa = Partition(kappa)
            if kappa.length > nvars:
                raise ParameterException("Monomial %s needs more than %d variables" % (kappa, nvars))
            if value != 0:
                self.coeffs[kappa] = value

    def __repr__(self):
        terms = ["%s*m%s" % (self.coeffs[k], k) for k in sorted(self.coeffs, reverse=True)]
        return "SymPoly(%d, %s)" % (self.nvars, " + ".join(terms) or "0")

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def _checkCompatible(self, other):
        if self.nvars != other.nvars:
            raise ParameterException("Symmetric polynomials in %d and %d variables" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._checkCompatible(other)
        result = dict(self.coeffs)
        for kappa, value in other.coeffs.items():
            result[kappa] = result.get(kappa, 0) + value
        return SymPoly(self.nvars, result)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, factor):
        return SymPoly(self.nvars, dict((k, v * factor) for k, v in self.coeffs.items()))

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            return self.scaled(other)
        self._checkCompatible(other)
        left, right = self.toPolynomial(), other.toPolynomial()
        product = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                exponent = tuple(x + y for x, y in zip(e1, e2))
                product[exponent] = product.get(exponent, 0) + c1 * c2
        return SymPoly.fromPolynomial(self.nvars, product)

    __rmul__ = scaled

    def coefficient(self, kappa):
        return self.coeffs.get(Partition(kappa), 0)

    @property
    def degree(self):
        return max((k.size for k in self.coeffs), default=0)

    def toPolynomial(self):
        """ Expanded form {exponent tuple: coefficient} """
        result = {}
        for kappa, value in self.coeffs.items():
            for exponent in monomialExponents(kappa, self.nvars):
                result[exponent] = value
        return result

    @classmethod
    def fromPolynomial(cls, nvars, poly):
        """ Read the monomial coefficients off the sorted exponents of a symmetric polynomial """
        coeffs = {}
        for exponent, value in poly.items():
            if list(exponent) == sorted(exponent, reverse=True):
                coeffs[Partition(exponent)] = value
        return cls(nvars, coeffs)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ParameterException("Point has %d coordinates, the polynomial %d variables" % (len(point), self.nvars))
        point = [toExact(t) for t in point]
        total = 0
        for kappa, value in self.coeffs.items():
            monomialSum = 0
            for exponent in monomialExponents(kappa, self.nvars):
                term = 1
                for t, e in zip(point, exponent):
                    if e:
                        term *= t ** e
                monomialSum += term
            total += value * monomialSum
        return total

    def atOnes(self):
        """ Value at (1, ..., 1) without expanding """
        return sum(value * monomialCount(kappa, self.nvars) for kappa, value in self.coeffs.items())


def evalSym(pol, point):
    """
    _evalSym_

    Exact for rational points.
    """
    return pol.evaluate(point)


def _horizontalStrips(mu, size):
    """ Partitions nu with mu/nu a horizontal strip of the given size """
    mu = tuple(mu)

    def rows(i, remaining):
        if i == len(mu):
            if remaining == 0:
                yield ()
            return
        lower = mu[i+1] if i + 1 < len(mu) else 0
        for removed in range(min(mu[i] - lower, remaining), -1, -1):
            for tail in rows(i + 1, remaining - removed):
                yield (mu[i] - removed,) + tail
    return [Partition(nu) for nu in rows(0, size)]


@lru_cache(maxsize=None)
def _kostka(mu, content):
    if not content:
        return 1 if not mu else 0
    if sum(mu) != sum(content):
        return 0
    return sum(_kostka(tuple(nu), content[:-1]) for nu in _horizontalStrips(mu, content[-1]))


def kostkaNumber(mu, content):
    """
    _kostkaNumber_

    Number of semistandard tableaux of shape mu with the given content
    (a weak composition: content[i] copies of the letter i+1).
    """
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ParameterException("Content must be nonnegative, got %s" % (content,))
    return _kostka(tuple(Partition(mu)), content)


def hookLengthCount(mu):
    """ f^mu, the number of standard tableaux of shape mu """
    mu = Partition(mu)
    denominator = 1
    for hook in mu.hooks():
        denominator *= hook
    return math.factorial(mu.size) // denominator


def principalSpec(mu, n):
    """
    _principalSpec_

    s_mu(1^n) by the hook-content formula.
    """
    mu = Partition(mu)
    if mu.length > n:
        raise ParameterException("Partition %s is longer than %d" % (mu, n))
    value = Fraction(1)
    hooks = iter(mu.hooks())
    for i, row in enumerate(mu):
        for j in range(row):
            value *= Fraction(n + j - i, next(hooks))
    return int(value)


@lru_cache(maxsize=None)
def _schur(mu, n):
    return SymPoly(n, dict((kappa, _kostka(tuple(mu), tuple(kappa))) for kappa in partitionsOf(sum(mu), n)))


def schur(mu, n):
    """
    _schur_

    s_mu in n variables; the monomial coefficients are Kostka numbers.
    """
    mu = Partition(mu)
    if mu.length > n:
        raise ParameterException("Partition %s is longer than %d" % (mu, n))
    return _schur(mu, n)


def _laplaceBeltramiColumn(kappa, n, alpha):
    """
    Coefficients [D]_{nu -> kappa} of m_kappa in D m_nu for the eigenoperator
    D = alpha/2 sum t_i^2 d_i^2 + sum_{i != j} t_i^2/(t_i - t_j) d_i.
    Returns {nu: weight}.
    """
    parts = list(kappa.padded(n))
    column = {kappa: alpha / 2 * sum(k * (k - 1) for k in parts)
                     + sum(parts[i] * (n - 1 - i) for i in range(n))}
    for i in range(n):
        for j in range(i + 1, n):
            total = parts[i] + parts[j]
            for q in range(parts[j]):
                p = total - q
                source = list(parts)
                source[i], source[j] = p, q
                nu = Partition(sorted(source, reverse=True))
                column[nu] = column.get(nu, 0) + (p - q)
    return column


@lru_cache(maxsize=None)
def _jackSpherical(mu, n, a):
    alpha = Fraction(2) / a if not isinstance(a, float) else 2.0 / a
    targets = sorted(partitionsOf(mu.size, n), reverse=True)
    targets = [kappa for kappa in targets if kappa <= mu]
    columns = dict((kappa, _laplaceBeltramiColumn(kappa, n, alpha)) for kappa in targets)
    eigenvalue = columns[mu][mu]
    coeffs = {mu: Fraction(1)}
    for kappa in targets[1:]:
        column = columns[kappa]
        gap = eigenvalue - column[kappa]
        rhs = sum(coeffs.get(nu, 0) * weight for nu, weight in column.items() if nu != kappa)
        if rhs == 0:
            continue
        if gap == 0:
            raise NumericalException("Degenerate eigenvalue for %s below %s at a = %s" % (kappa, mu, a))
        coeffs[kappa] = rhs / gap
    unnormalized = SymPoly(n, coeffs)
    return unnormalized.scaled(1 / unnormalized.atOnes())


def jackSpherical(mu, n, a):
    """
    _jackSpherical_

    Spherical polynomial Phi_mu in n variables for the multiplicity a, i.e.
    the Jack polynomial with parameter 2/a normalized by Phi_mu(1^n) = 1.
    Monomial coefficients are solved by back-substitution down the
    lexicographic order.
    """
    mu = Partition(mu)
    if mu.length > n:
        raise ParameterException("Partition %s is longer than %d" % (mu, n))
    a = toExact(a)
    if not a > 0:
        raise ParameterException("Multiplicity a must be positive, got %s" % a)
    return _jackSpherical(mu, n, a)


def dimIsotype(mu, params):
    """
    _dimIsotype_

    dim P_mu(V) for the ball (binomial(d+m-1, m)) and for C^{r x s}
    (s_mu(1^r) s_mu(1^s)).
    """
    mu = Partition(mu)
    if not params.hasModel:
        raise ModelNotSupportedException("No concrete polynomial model for r=%s a=%s b=%s" % (params.r, params.a, params.b))
    if mu.length > params.r:
        raise ParameterException("Partition %s is longer than the rank %d" % (mu, params.r))
    r, s = params.shape
    if r == 1:
        d, m = int(params.d), mu.size
        return math.comb(d + m - 1, m)
    return principalSpec(mu, r) * principalSpec(mu, s)
