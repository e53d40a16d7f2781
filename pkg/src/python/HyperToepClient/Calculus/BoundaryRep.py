"""
Boundary limits of Toeplitz operators at a diagonal tripotent c = e_11 + ... + e_ii.

The peaking functions h_n = exp(n (z|c)) concentrate on the face c + V_0^c.
For q on the Peirce-0 block and a polynomial symbol f, the residual

    || T(f)(h_n q) - h_n T^c(f^(c)) q || / || h_n q ||

tends to zero, where T^c is the Toeplitz operator of the limit type on the
reduced model and f^(c)(zeta) = f(c + zeta). h_n is used as its Taylor
polynomial of degree D; the relative type norm of the dropped tail is
reported next to every residual.
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
import math
from collections import namedtuple
from fractions import Fraction

from scipy.special import logsumexp

from HyperToepClient.ClientExceptions import ParameterException, InconclusiveException
from HyperToepClient.ClientUtilities import CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import partitionsOf, limitType
from HyperToepClient.Calculus.SymFunc import hookLengthCount, principalSpec
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly, diagonalTripotent, restrictSymbol, embedPeirceZero
from HyperToepClient.Calculus.IsotypeBasis import typeNorm2, rankProject
from HyperToepClient.Calculus.FockToeplitz import ToeplitzSymbol, toeplitzApply

logger = logging.getLogger(CALC_LOGGER_NAME)

## Terms of the norm series below exp(-TAIL_LOG_DEPTH) times the largest one end the summation.
TAIL_LOG_DEPTH = 80

## Hard cap on the number of norm series terms.
MAX_SERIES_TERMS = 100000

BoundaryResidual = namedtuple('BoundaryResidual', ['n', 'degree', 'residual', 'tailBound'])


def _checkTripotent(htype, shape, i):
    if isinstance(i, bool) or int(i) != i or not 1 <= i <= min(shape):
        raise ParameterException("Tripotent rank must satisfy 1 <= i <= %d, got %r" % (min(shape), i))
    if i > htype.ell:
        raise ParameterException("Tripotent rank %d exceeds the rank bound %d of the type" % (i, htype.ell))


def faceLimitType(htype, i=1):
    """ Type of T^c: the limit type taken once per unit of the tripotent rank """
    for _ in range(i):
        htype = limitType(htype)
    return htype


def peakingPolynomial(shape, n, degree, i=1):
    """ Taylor polynomial of degree D of exp(n (z|c)) """
    c = diagonalTripotent(shape, i)
    pairing = MatrixPoly.linearForm(shape, c)
    result, term = MatrixPoly.constant(shape, 1), MatrixPoly.constant(shape, 1)
    for s in range(1, degree + 1):
        term = term * pairing * Fraction(n, s)
        result = result + term
    return result


def _logNormTerm(htype, n, s, i):
    """
    log of n^{2s}/(s!)^2 ||(z|c)^s||^2 where
    ||(z|c)^s||^2 = s! sum_{|mu| = s, length <= min(i, ell)} coefficient(mu) f^mu s_mu(1^i).
    """
    total = Fraction(0)
    for mu in partitionsOf(s, min(i, htype.ell)):
        total += htype.coefficient(mu) * hookLengthCount(mu) * principalSpec(mu, i)
    if total <= 0:
        return -math.inf
    total = total * Fraction(n) ** (2 * s) / math.factorial(s)
    return math.log(total.numerator) - math.log(total.denominator)


def _normSeries(htype, n, i, minTerms):
    logs = []
    peak = -math.inf
    for s in range(MAX_SERIES_TERMS):
        logs.append(_logNormTerm(htype, n, s, i))
        peak = max(peak, logs[-1])
        if s >= minTerms and s > 2 and logs[-1] < logs[-2] < logs[-3] and logs[-1] < peak - TAIL_LOG_DEPTH:
            return logs
    raise InconclusiveException("Norm series of the peaking function did not decay within %d terms" % MAX_SERIES_TERMS)


def _tailBound(logs, degree):
    if len(logs) <= degree + 1:
        return 0.0
    head = logsumexp(logs[:degree + 1])
    tailLogs = logs[degree + 1:]
    ratio = math.exp(logs[-1] - logs[-2])
    tailLogs.append(logs[-1] + math.log(ratio / (1 - ratio)))
    return math.exp((logsumexp(tailLogs) - head) / 2)


def peakingTailBound(htype, n, degree, i=1):
    """
    _peakingTailBound_

    Relative type norm ||h_n - h_n^(D)|| / ||h_n^(D)|| of the truncation,
    with a geometric bound for the part beyond the summed terms.
    """
    return _tailBound(_normSeries(htype, n, i, degree + 1), degree)


def truncationDegree(htype, n, tol, i=1, minimum=1):
    """ Smallest D >= minimum whose tail bound is below tol """
    logs = _normSeries(htype, n, i, minimum)
    for degree in range(minimum, len(logs)):
        if _tailBound(logs, degree) < tol:
            logger.debug("Peaking function n=%d truncated at degree %d", n, degree)
            return degree
    return len(logs)


def boundaryResidual(htype, symbol, q, n, degree=None, tol=1e-3, i=1):
    """
    _boundaryResidual_

    Residual of the boundary limit for the symbol and the test function q on
    the Peirce-0 block of c = e_11 + ... + e_ii. degree None picks the
    smallest truncation with an admissible tail bound; an explicit degree
    whose tail bound is not below tol raises InconclusiveException.
    """
    shape = symbol.poly.shape
    _checkTripotent(htype, shape, i)
    reducedShape = (shape[0] - i, shape[1] - i)
    if q.shape != reducedShape:
        raise ParameterException("Test function of shape %s is not on the Peirce-0 block %s" % (q.shape, reducedShape))
    minimum = max(1, symbol.degree + q.degree)
    if degree is None:
        degree = truncationDegree(htype, n, tol, i, minimum)
    elif degree < minimum:
        raise ParameterException("Truncation degree %d is smaller than the degree %d of symbol and test function" % (degree, minimum))
    tailBound = peakingTailBound(htype, n, degree, i)
    if tailBound >= tol:
        exc = InconclusiveException("Tail bound %.3e of the degree %d truncation exceeds %s at n=%d" % (tailBound, degree, tol, n))
        exc.tailBound = tailBound
        raise exc
    reducedType = faceLimitType(htype, i)
    q = rankProject(q, reducedType.ell)
    peaking = peakingPolynomial(shape, n, degree, i)
    source = rankProject(peaking * embedPeirceZero(q, shape, i), htype.ell)
    reducedSymbol = ToeplitzSymbol(restrictSymbol(symbol.poly, i), symbol.conjugated)
    limit = toeplitzApply(reducedType, reducedSymbol, q)
    difference = (toeplitzApply(htype, symbol, source)
                  - rankProject(peaking * embedPeirceZero(limit, shape, i), htype.ell))
    denominator = typeNorm2(htype, source)
    if denominator == 0:
        raise ParameterException("Test function %s vanishes in the space of the limit type" % q.describe())
    residual = math.sqrt(float(Fraction(typeNorm2(htype, difference)) / denominator))
    logger.debug("Boundary residual of %s at n=%d, D=%d: %.6e (tail %.3e)", symbol.describe(), n, degree, residual, tailBound)
    return BoundaryResidual(n, degree, residual, tailBound)


def residualSequence(htype, symbol, q, nValues, degree=None, tol=1e-3, i=1):
    return [boundaryResidual(htype, symbol, q, n, degree, tol, i) for n in nValues]


def eventuallyDecreasing(values, slack=1e-12):
    """
    Index where the non-increasing tail of the sequence starts; values equal
    up to slack (relative) count as non-increasing.
    """
    start = len(values) - 1
    while start > 0 and values[start] <= values[start - 1] * (1 + slack) + slack:
        start -= 1
    return max(start, 0)


def boundaryValue(symbol, i=1):
    """
    f(c) when the Peirce-0 block of c is trivial, the scalar by which the
    limit operator acts; None otherwise.
    """
    restricted = restrictSymbol(symbol.poly, i)
    if restricted.nvars:
        return None
    value = restricted.coefficient(())
    return value.conjugate() if symbol.conjugated else value
