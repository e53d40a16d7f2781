"""
Structure constants of irreducible hermitian Jordan triples and the
parameter algebra built on them: partitions, multivariate Pochhammer
symbols, hypergeometric types, limit types at boundary faces and the
stratification of boundary orbits.

All values are immutable. With integer/rational inputs every operation
runs in exact rational arithmetic (fractions.Fraction); floats are only
accepted where they are binary-exact or where the caller explicitly works
in floating mode.
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
import math
from collections import namedtuple
from fractions import Fraction

from scipy.special import poch

from HyperToepClient.ClientExceptions import ParameterException, NumericalException
from HyperToepClient.ClientUtilities import toExact, isExact, CALC_LOGGER_NAME

logger = logging.getLogger(CALC_LOGGER_NAME)

## Marker returned by classifyStratum for points outside the closed set.
OUTSIDE = None


class Partition(tuple):
    """
    _Partition_

    Weakly decreasing tuple of positive integers. Trailing zeros are dropped
    on construction, so Partition((2, 1, 0)) == Partition((2, 1)).
    Parts are addressed 1-based through part(j), like the m_j of the
    Pochhammer formula.
    """

    def __new__(cls, parts=()):
        clean = []
        for value in parts:
            if isinstance(value, bool) or int(value) != value:
                raise ParameterException("Partition parts must be integers, got %r" % (tuple(parts),))
            clean.append(int(value))
        for i, value in enumerate(clean):
            if value < 0:
                raise ParameterException("Partition parts must be nonnegative, got %r" % (tuple(clean),))
            if i and clean[i-1] < value:
                raise ParameterException("Partition parts must be weakly decreasing, got %r" % (tuple(clean),))
        while clean and clean[-1] == 0:
            clean.pop()
        return tuple.__new__(cls, clean)

    def __repr__(self):
        return "Partition(%s)" % (list(self),)

    def __str__(self):
        return "(%s)" % ",".join(str(m) for m in self)

    @property
    def length(self):
        return len(self)

    @property
    def size(self):
        return sum(self)

    def part(self, j):
        """ m_j, 1-based; zero beyond the length """
        return self[j-1] if 1 <= j <= len(self) else 0

    def padded(self, n):
        if len(self) > n:
            raise ParameterException("Partition %s has more than %d parts" % (self, n))
        return tuple(self) + (0,) * (n - len(self))

    def addBox(self, j):
        """ mu + eps_j, or None when the result is not a partition """
        parts = list(self.padded(max(j, len(self))))
        parts[j-1] += 1
        if j > 1 and parts[j-2] < parts[j-1]:
            return None
        return Partition(parts)

    def removeBox(self, j):
        """ mu - eps_j, or None when the result is not a partition """
        if self.part(j) == 0 or self.part(j+1) > self.part(j) - 1:
            return None
        parts = list(self)
        parts[j-1] -= 1
        return Partition(parts)

    def shifted(self, n, r):
        """ mu + n(1,...,1) with r parts """
        return Partition([m + n for m in self.padded(r)])

    def conjugate(self):
        if not self:
            return Partition()
        return Partition([sum(1 for m in self if m > i) for i in range(self[0])])

    def dominates(self, other):
        """ self >= other in the dominance order (same size required) """
        if self.size != other.size:
            return False
        n = max(len(self), len(other))
        left, right = 0, 0
        for a, b in zip(self.padded(n), other.padded(n)):
            left += a
            right += b
            if left < right:
                return False
        return True

    def hooks(self):
        conj = self.conjugate()
        return [self[i] - j - 1 + conj[j] - i for i in range(len(self)) for j in range(self[i])]


def partitionsOf(n, maxLength=None, maxPart=None):
    """
    _partitionsOf_

    Generate the partitions of n in decreasing lexicographic order.
    """
    if maxPart is None or maxPart > n:
        maxPart = n
    if n == 0:
        yield Partition()
        return
    if maxLength is not None and maxLength <= 0:
        return
    for first in range(maxPart, 0, -1):
        rest = None if maxLength is None else maxLength - 1
        for tail in partitionsOf(n - first, rest, first):
            yield Partition((first,) + tuple(tail))


def partitionsUpTo(maxWeight, maxLength=None):
    """
    All partitions with |mu| <= maxWeight in graded order: by size, then
    increasing lexicographic order (a linear extension of dominance).
    """
    result = []
    for n in range(maxWeight + 1):
        result.extend(sorted(partitionsOf(n, maxLength)))
    return result


def risingFactorial(x, n):
    """
    (x)_n = x (x+1) ... (x+n-1). Exact for exact x; floats go through scipy.
    """
    if n < 0:
        raise ParameterException("Rising factorial needs n >= 0, got %r" % n)
    if isinstance(x, float):
        return float(poch(x, n))
    result = Fraction(1) if isExact(x) else 1
    for i in range(n):
        result *= x + i
    return result


def pochhammer(nu, mu, a):
    """
    _pochhammer_

    Multivariate Pochhammer symbol (nu)_mu = prod_j (nu - a/2 (j-1))_{m_j}.
    A pole gives a zero factor and the product is returned as is.
    """
    mu = Partition(mu)
    nu, halfA = toExact(nu), toExact(a) / 2
    result = Fraction(1) if isExact(nu) and isExact(halfA) else 1.0
    for j, m in enumerate(mu, 1):
        result *= risingFactorial(nu - halfA * (j - 1), m)
    return result


class StructureParams(namedtuple('StructureParams', ['r', 'a', 'b', 'd', 'p', 'shape'])):
    """
    Jordan triple invariants (r, a, b) with the derived dimension d and genus p.
    shape is (r, s) when a concrete polynomial model exists: the matrix triple
    C^{r x s} (a = 2, s = r + b) or the ball C^{1 x d} (r = 1); None otherwise.
    """
    __slots__ = ()

    @property
    def dOverR(self):
        return self.d / self.r

    @property
    def hasModel(self):
        return self.shape is not None

    @property
    def isBall(self):
        return self.r == 1 and self.shape is not None

    def describe(self):
        return {'r': self.r, 'a': self.a, 'b': self.b, 'd': self.d, 'p': self.p,
                'model': 'C^{%dx%d}' % self.shape if self.shape else None}


def deriveParams(r, a, b):
    """
    _deriveParams_

    d = r + b r + a r(r-1)/2, p = 2 + a(r-1) + b.
    """
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise ParameterException("Rank r must be a positive integer, got %r" % (r,))
    r = int(r)
    a, b = toExact(a), toExact(b)
    if not a > 0:
        raise ParameterException("Multiplicity a must be positive, got %s" % a)
    if b < 0:
        raise ParameterException("Multiplicity b must be nonnegative, got %s" % b)
    d = r + b * r + a * r * (r - 1) / 2
    p = 2 + a * (r - 1) + b
    shape = None
    if b == int(b) and (a == 2 or r == 1):
        shape = (r, r + int(b))
    return StructureParams(r, a, b, d, p, shape)


def reducedParams(params, i=1):
    """ Structure constants of the Peirce-0 space of a rank-i tripotent """
    if not 0 <= i < params.r:
        raise ParameterException("Tripotent rank must satisfy 0 <= i < r = %d, got %r" % (params.r, i))
    return deriveParams(params.r - i, params.a, params.b)


def genusK(params, k):
    """ p_k = 2 + a(r-k-1) + b, the genus of the rank r-k Peirce-0 space """
    return 2 + params.a * (params.r - k - 1) + params.b


def nuForms(params, k):
    """
    The four algebraic expressions of nu_k; they must coincide.
    """
    r, a, b, p = params.r, params.a, params.b, params.p
    return (params.d / r + a * (r - k) / 2,
            p - 1 - a * (k - 1) / 2,
            1 + b + a * (2 * r - k - 1) / 2,
            genusK(params, k) + a * (k + 1) / 2 - 1)


def nuK(params, k):
    """
    _nuK_

    Embedded Wallach parameter nu_k = d/r + a/2 (r-k). k = 0 gives the
    placeholder p - 1 + a/2, which the same formula produces.
    """
    if isinstance(k, bool) or int(k) != k or not 0 <= k <= params.r:
        raise ParameterException("k must be an integer with 0 <= k <= r = %d, got %r" % (params.r, k))
    forms = nuForms(params, int(k))
    if all(isExact(f) for f in forms):
        if len(set(forms)) != 1:
            raise NumericalException("nu_%d forms disagree: %s" % (k, forms))
    elif not all(math.isclose(forms[0], f, rel_tol=1e-13, abs_tol=1e-13) for f in forms):
        raise NumericalException("nu_%d forms disagree: %s" % (k, forms))
    return forms[0]


def _cancel(x, y):
    x, y = list(x), list(y)
    for value in list(x):
        if value in y:
            x.remove(value)
            y.remove(value)
    return tuple(x), tuple(y)


class HypergeomType(namedtuple('HypergeomType', ['x', 'y', 'a', 'ell'])):
    """
    _HypergeomType_

    Moment coefficients coefficient(mu) = prod (x_i)_mu / prod (y_i)_mu for
    partitions of length <= ell. len(y) = len(x) + 1.
    Equality compares the cancelled multisets, so a type and its simplified
    form are equal.
    """
    __slots__ = ()

    def __new__(cls, x, y, a, ell):
        x = tuple(toExact(v) for v in x)
        y = tuple(toExact(v) for v in y)
        if len(y) != len(x) + 1:
            raise ParameterException("A type needs len(y) = len(x) + 1, got %d and %d" % (len(x), len(y)))
        if isinstance(ell, bool) or int(ell) != ell or ell < 0:
            raise ParameterException("Rank bound ell must be a nonnegative integer, got %r" % (ell,))
        return super(HypergeomType, cls).__new__(cls, x, y, toExact(a), int(ell))

    def coefficient(self, mu):
        mu = Partition(mu)
        if mu.length > self.ell:
            raise ParameterException("Partition %s is longer than the rank bound %d" % (mu, self.ell))
        num = Fraction(1)
        for x in self.x:
            num *= pochhammer(x, mu, self.a)
        den = Fraction(1)
        for y in self.y:
            den *= pochhammer(y, mu, self.a)
        if den == 0:
            raise ParameterException("Pole of the type %s at %s" % (self, mu))
        return num / den

    def cancelled(self):
        x, y = _cancel(self.x, self.y)
        return HypergeomType(x, y, self.a, self.ell)

    def shifted(self, delta):
        return HypergeomType([v + delta for v in self.x], [v + delta for v in self.y], self.a, self.ell)

    def canonical(self):
        simple = self.cancelled()
        return (tuple(sorted(simple.x)), tuple(sorted(simple.y)), self.a, self.ell)

    def __eq__(self, other):
        if not isinstance(other, HypergeomType):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.canonical())

    def describe(self):
        simple = self.cancelled()
        return {'x': [str(v) for v in simple.x], 'y': [str(v) for v in simple.y],
                'a': str(self.a), 'ell': self.ell}


def makeType(params, k, lam, nu=None):
    """
    _makeType_

    Type of the measure on the boundary Kepler variety with k unit singular
    values and rank <= lam: x = {nu_lam, a lam/2}, y = {nu_k, d/r, a r/2}.
    For k = 0 the weighted Bergman parameter nu > p - 1 replaces nu_k.
    Common entries of x and y are cancelled.
    """
    for name, value in (('k', k), ('lambda', lam)):
        if isinstance(value, bool) or int(value) != value:
            raise ParameterException("%s must be an integer, got %r" % (name, value))
    k, lam = int(k), int(lam)
    if not 0 <= k <= lam <= params.r:
        raise ParameterException("Need 0 <= k <= lambda <= r, got k=%d lambda=%d r=%d" % (k, lam, params.r))
    if k == 0:
        if nu is None:
            raise ParameterException("k = 0 needs an explicit weight parameter nu > p - 1 = %s" % (params.p - 1))
        nu = toExact(nu)
        if not nu > params.p - 1:
            raise ParameterException("Weight parameter nu = %s must exceed p - 1 = %s" % (nu, params.p - 1))
        y0 = nu
    else:
        y0 = nuK(params, k)
    a = params.a
    nuLam = params.d / params.r + a * (params.r - lam) / 2
    x, y = _cancel([nuLam, a * lam / 2], [y0, params.d / params.r, a * params.r / 2])
    return HypergeomType(x, y, a, lam)


def limitType(htype):
    """
    _limitType_

    Type of the boundary limit on the Peirce-0 space of a minimal tripotent:
    every parameter decreases by a/2, the rank bound by one.
    """
    if htype.ell < 1:
        raise ParameterException("A type with rank bound 0 has no boundary limit")
    return HypergeomType([x - htype.a / 2 for x in htype.x],
                         [y - htype.a / 2 for y in htype.y], htype.a, htype.ell - 1)


def faceType(params, k, lam, i, nu=None):
    """
    _faceType_

    Limit of the type of (k, lam) at a tripotent of rank i, as a type on the
    reduced triple: (k-i, lam-i) while i < k, a weighted Bergman type with
    parameter nu_k - i a/2 (or nu - i a/2 when k = 0) once i >= k.
    Returns (reducedParams, type).
    """
    if not 0 <= i <= lam:
        raise ParameterException("Tripotent rank %r exceeds lambda = %r" % (i, lam))
    reduced = reducedParams(params, i)
    if i < k:
        return reduced, makeType(reduced, k - i, lam - i)
    base = nuK(params, k) if k >= 1 else toExact(nu)
    if base is None:
        raise ParameterException("k = 0 needs an explicit weight parameter nu")
    return reduced, makeType(reduced, 0, lam - i, base - i * params.a / 2)


StratumLabel = namedtuple('StratumLabel', ['i', 'j'])
StratumLabel.__doc__ = "i unit singular values, rank j"


def classifyStratum(sv, k, lam, tol=1e-9):
    """
    _classifyStratum_

    Label (i, j) of the stratum containing the point with singular values sv,
    or OUTSIDE when k <= i <= j <= lam fails. A value counts as a unit value
    when |1 - t| < tol and as nonzero when t > tol; values sitting exactly
    at the tolerance fall into the smaller index.
    """
    sv = list(sv)
    for left, right in zip(sv, sv[1:]):
        if left < right:
            raise ParameterException("Singular values must be sorted descending, got %s" % sv)
    if sv and (sv[-1] < 0 or sv[0] > 1 + tol):
        raise ParameterException("Singular values must lie in [0, 1+tol], got %s" % sv)
    i = sum(1 for t in sv if abs(1 - t) < tol)
    j = sum(1 for t in sv if t > tol)
    if k <= i <= j <= lam:
        return StratumLabel(i, j)
    return OUTSIDE


def strataPoset(k, lam):
    """
    Labels of the strata of the closed set (k, lam) and the closure
    relation: (i', j') lies in the closure of (i, j) iff i <= i' <= j' <= j.
    Returns (labels, relations) with relations as (lower, upper) pairs.
    """
    labels = [StratumLabel(i, j) for i in range(k, lam + 1) for j in range(i, lam + 1)]
    relations = [(low, up) for up in labels for low in labels
                 if low != up and up.i <= low.i <= low.j <= up.j]
    return labels, relations


class ParameterSet(namedtuple('ParameterSet', ['points', 'rayStart'])):
    """ Finite set of points together with the open ray (rayStart, oo) """
    __slots__ = ()

    def contains(self, nu):
        nu = toExact(nu)
        return nu in self.points or nu > self.rayStart

    def describe(self):
        return {'points': [str(v) for v in self.points], 'ray': "(%s, oo)" % self.rayStart}


def wSub(params):
    """ {nu_j : 1 <= j <= r} together with (p-1, oo) """
    return ParameterSet(tuple(nuK(params, j) for j in range(1, params.r + 1)), params.p - 1)


def wallachSet(params):
    """ Discrete points a/2 j (0 <= j < r) and the continuous part (a/2 (r-1), oo) """
    return ParameterSet(tuple(params.a * j / 2 for j in range(params.r)), params.a * (params.r - 1) / 2)


def isInWallachSet(params, nu):
    return wallachSet(params).contains(nu)
