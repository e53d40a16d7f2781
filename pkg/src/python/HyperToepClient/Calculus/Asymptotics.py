"""
Entire hypergeometric series at large argument and the moment ratios of the
peaking functions.

    F(x) = sum_n prod Gamma(n + beta_i) / prod Gamma(n + mu_j) x^n / n!

With len(mu) = len(beta) + 1 the series grows like A x^(theta/2) exp(2 sqrt(x)),
theta = 1/2 + sum beta - sum mu, and A does not depend on the parameters.
The moment ratio R(n) of the peaking proof is C_lam F_lam(n^2) / F_0(n^2).
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy
from scipy.special import gammaln

from HyperToepClient.ClientExceptions import ParameterException, NumericalException
from HyperToepClient.ClientUtilities import toExact, CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import Partition, limitType

logger = logging.getLogger(CALC_LOGGER_NAME)

## Summation stops after this many consecutive terms below RELATIVE_CUTOFF times the largest term.
STOP_AFTER = 20
RELATIVE_CUTOFF = 1e-18
MAX_TERMS = 1000000
CHUNK = 512

## x^(-theta/2) exp(-2 sqrt(x)) F(x) for beta = {}, mu = {1}, i.e. for I_0(2 sqrt(x)).
BESSEL_LIMIT = 1 / (2 * math.sqrt(math.pi))

DEFAULT_GRID = tuple(4.0 ** j for j in range(5, 13))

CONVERGENCE_COLUMNS = ['x', 'scaled', 'delta']


class WrightSeriesSpec(namedtuple('WrightSeriesSpec', ['beta', 'mu'])):
    """
    _WrightSeriesSpec_

    Parameters of F; all of them must be positive.
    """
    __slots__ = ()

    def __new__(cls, beta, mu):
        beta = tuple(toExact(v) for v in beta)
        mu = tuple(toExact(v) for v in mu)
        for value in beta + mu:
            if not value > 0:
                raise ParameterException("Series parameters must be positive, got beta=%s mu=%s"
                                         % ([str(v) for v in beta], [str(v) for v in mu]))
        return super(WrightSeriesSpec, cls).__new__(cls, beta, mu)

    @property
    def kappa(self):
        return 1 + len(self.mu) - len(self.beta)

    @property
    def theta(self):
        return Fraction(len(self.mu) - len(self.beta), 2) + sum(self.beta, Fraction(0)) - sum(self.mu, Fraction(0))

    def describe(self):
        return {'beta': [str(v) for v in self.beta], 'mu': [str(v) for v in self.mu],
                'kappa': self.kappa, 'theta': str(self.theta)}


def _logTerms(spec, n, logx):
    values = n * logx - gammaln(n + 1)
    for b in spec.beta:
        values += gammaln(n + float(b))
    for m in spec.mu:
        values -= gammaln(n + float(m))
    return values


def wrightLogEval(spec, x):
    """
    _wrightLogEval_

    log F(x), summed in the log domain with compensated summation.
    """
    if x < 0:
        raise ParameterException("The series is evaluated for x >= 0 only, got %s" % x)
    if x == 0:
        return float(_logTerms(spec, numpy.zeros(1), 0.0)[0])
    logx = math.log(x)
    logs = []
    peak, below = -math.inf, 0
    cutoff = math.log(RELATIVE_CUTOFF)
    start = 0
    while True:
        chunk = _logTerms(spec, numpy.arange(start, start + CHUNK, dtype=float), logx)
        for value in chunk:
            logs.append(float(value))
            if value > peak:
                peak = float(value)
            if value < peak + cutoff:
                below += 1
                if below >= STOP_AFTER:
                    return peak + math.log(math.fsum(math.exp(v - peak) for v in logs))
            else:
                below = 0
        start += CHUNK
        if start >= MAX_TERMS:
            raise NumericalException("Series %s at x=%s did not converge within %d terms" % (spec.describe(), x, MAX_TERMS))


def wrightEval(spec, x):
    """ F(x); raises when the value leaves the floating range """
    logValue = wrightLogEval(spec, x)
    try:
        return math.exp(logValue)
    except OverflowError:
        raise NumericalException("F(%s) = exp(%.6e) overflows, use wrightLogEval" % (x, logValue))


def wrightScaledLimit(spec, grid=DEFAULT_GRID):
    """
    _wrightScaledLimit_

    x^(-theta/2) exp(-2 sqrt(x)) F(x) over the grid.
    """
    if len(spec.mu) != len(spec.beta) + 1:
        raise ParameterException("The scaled limit needs len(mu) = len(beta) + 1, got %d and %d"
                                 % (len(spec.beta), len(spec.mu)))
    theta = float(spec.theta)
    values = []
    for x in grid:
        if not x > 0:
            raise ParameterException("Grid points must be positive, got %s" % x)
        values.append(math.exp(wrightLogEval(spec, x) - theta / 2 * math.log(x) - 2 * math.sqrt(x)))
    return values


def convergenceTable(grid, values):
    """ Rows (x, scaled value, delta to the previous value) """
    rows = []
    for index, (x, value) in enumerate(zip(grid, values)):
        rows.append((x, value, None if index == 0 else abs(value - values[index - 1])))
    return rows


def isCauchy(values, tol):
    """ Successive differences shrink monotonically and the last one is below tol """
    deltas = [abs(b - a) for a, b in zip(values, values[1:])]
    if not deltas:
        return False
    shrinking = all(later <= earlier for earlier, later in zip(deltas, deltas[1:]))
    return shrinking and deltas[-1] < tol


class PeakingMomentSpec(namedtuple('PeakingMomentSpec', ['type', 'lam', 'ell', 'a'])):
    """
    _PeakingMomentSpec_

    Moment of |N_m|^2, m = (m1, lam), against the normalized |h_n|^2 for a
    type of rank bound ell; lam has at most ell - 1 parts.
    """
    __slots__ = ()


def makePeakingSpec(htype, lam):
    lam = Partition(lam)
    if htype.ell < 1:
        raise ParameterException("Peaking needs a type of rank bound >= 1")
    if lam.length > htype.ell - 1:
        raise ParameterException("Partition %s has more than ell - 1 = %d parts" % (lam, htype.ell - 1))
    return PeakingMomentSpec(htype, lam, htype.ell, htype.a)


def assemblePeakingSeries(pspec):
    """
    _assemblePeakingSeries_

    (beta, mu) of F_lam. Numerator: lam_1 + x_i, lam_1 + 1 + a/2 (ell-1) and
    lam_1 - lam_j + 1 + a/2 (j-1) for j < ell; denominator: lam_1 + y_i and
    lam_1 - lam_j + 1 + a/2 j for j < ell, with one more Gamma(n + 1) that
    cancels the j = 1 numerator entry when it equals 1.
    """
    htype, ell, half = pspec.type, pspec.ell, pspec.a / 2
    lam = pspec.lam.padded(ell - 1)
    first = lam[0] if lam else 0
    beta = [first + x for x in htype.x] + [first + 1 + half * (ell - 1)]
    beta += [first - lam[j - 1] + 1 + half * (j - 1) for j in range(1, ell)]
    mu = [first + y for y in htype.y]
    mu += [first - lam[j - 1] + 1 + half * j for j in range(1, ell)]
    if 1 in beta:
        beta.remove(1)
    else:
        mu.append(Fraction(1))
    for value in list(beta):
        if value in mu:
            beta.remove(value)
            mu.remove(value)
    return WrightSeriesSpec(beta, mu)


def peakingTarget(pspec):
    """ Limit of R(n): the coefficient of lam in the limit type """
    return limitType(pspec.type).coefficient(pspec.lam)


def peakingMomentRatio(pspec, n):
    """
    _peakingMomentRatio_

    R(n) = C_lam F_lam(n^2) / F_0(n^2), C_lam = peakingTarget(pspec).
    """
    if n < 1:
        raise ParameterException("Peaking exponent must be positive, got %r" % n)
    zero = pspec._replace(lam=Partition())
    x = float(n) ** 2
    logRatio = wrightLogEval(assemblePeakingSeries(pspec), x) - wrightLogEval(assemblePeakingSeries(zero), x)
    return float(peakingTarget(pspec)) * math.exp(logRatio)


def richardson(pspec, n):
    """ 2 R(2n) - R(n), cancelling the 1/n term of R """
    return 2 * peakingMomentRatio(pspec, 2 * n) - peakingMomentRatio(pspec, n)


def doublingGrid(nMax, start=25):
    grid = []
    n = start
    while n <= nMax:
        grid.append(n)
        n *= 2
    if not grid or grid[-1] != nMax:
        grid.append(nMax)
    return grid


def thetaOfType(htype):
    """
    _thetaOfType_

    theta = 1/2 + sum x - sum y
    """
    return Fraction(1, 2) + sum(htype.x, Fraction(0)) - sum(htype.y, Fraction(0))
