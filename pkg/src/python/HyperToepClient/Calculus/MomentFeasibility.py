"""
Rank one moment problem: is a formal type {x; y} realized by a rotation
invariant measure on the closed ball of C^d?

A realizing measure has a radial profile on [0, 1] with moments
rho_m = (d)_m coefficient((m)); by Hausdorff such a profile exists iff the
Hankel matrices of rho and of its first difference are positive semidefinite.
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
import math
from collections import namedtuple, OrderedDict
from fractions import Fraction

import mpmath
import numpy
from scipy.special import betaln

from HyperToepClient.ClientExceptions import ParameterException
from HyperToepClient.ClientUtilities import toExact, CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import HypergeomType, Partition, deriveParams, risingFactorial, wSub

logger = logging.getLogger(CALC_LOGGER_NAME)

## Digits of the extended precision eigenvalue refinement.
REFINE_DPS = 50

## Minimal eigenvalues within REFINE_BAND * tol of zero are recomputed in extended precision.
REFINE_BAND = 10

SCAN_COLUMNS = ['d', 'nu', 'feasible', 'expected', 'min_eig_H', 'min_eig_DH']


class MomentSequence(namedtuple('MomentSequence', ['values', 'd', 'type'])):
    """
    _MomentSequence_

    values[m] = rho_m for 0 <= m <= M, exact when the type is.
    """
    __slots__ = ()

    @property
    def maxIndex(self):
        return len(self.values) - 1


HausdorffResult = namedtuple('HausdorffResult', ['feasible', 'minEigH', 'minEigDH', 'refined'])


def wSubType(nu):
    """ The type {y = nu} of the rank one weighted spaces """
    return HypergeomType([], [nu], 2, 1)


def radialMoments(d, htype, maxIndex):
    """
    _radialMoments_

    rho_m = (d)_m coefficient((m)) for m = 0..M.
    """
    if isinstance(d, bool) or int(d) != d or d < 1:
        raise ParameterException("Ball dimension d must be a positive integer, got %r" % (d,))
    if htype.ell < 1:
        raise ParameterException("A rank one moment sequence needs a type of rank bound >= 1")
    values = [risingFactorial(Fraction(int(d)), m) * htype.coefficient(Partition((m,)))
              for m in range(maxIndex + 1)]
    return MomentSequence(tuple(values), int(d), htype)


def _hankel(values, size, offset=0):
    return [[values[i + j + offset] for j in range(size)] for i in range(size)]


def _minEigenvalue(matrix, tol):
    """ (min eigenvalue, refined) with extended precision inside the ambiguity band """
    floatMin = float(numpy.linalg.eigvalsh(numpy.array([[float(v) for v in row] for row in matrix]))[0])
    if abs(floatMin) >= REFINE_BAND * tol:
        return floatMin, False
    with mpmath.workdps(REFINE_DPS):
        exact = mpmath.matrix([[_toMpf(v) for v in row] for row in matrix])
        eigenvalues = mpmath.eigsy(exact, eigvals_only=True)
        refined = min(eigenvalues[i] for i in range(eigenvalues.rows))
        logger.debug("Refined min eigenvalue %.3e -> %s", floatMin, mpmath.nstr(refined, 15))
        return float(refined), True


def _toMpf(value):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def hausdorffTest(seq, size, tol):
    """
    _hausdorffTest_

    Feasible iff the size x size Hankel matrices of rho_m and of
    rho_m - rho_{m+1} have minimal eigenvalue >= -tol.
    """
    if size < 1:
        raise ParameterException("Hankel size must be positive, got %r" % size)
    if 2 * size > seq.maxIndex:
        raise ParameterException("Hankel size %d needs moments up to index %d, only %d available"
                                 % (size, 2 * size, seq.maxIndex))
    differences = [seq.values[m] - seq.values[m + 1] for m in range(len(seq.values) - 1)]
    minH, refinedH = _minEigenvalue(_hankel(seq.values, size), tol)
    minDH, refinedDH = _minEigenvalue(_hankel(differences, size), tol)
    return HausdorffResult(minH >= -tol and minDH >= -tol, minH, minDH, refinedH or refinedDH)


def betaMoments(d, nu, maxIndex):
    """
    _betaMoments_

    Moments of the Beta(d, nu - d) profile, nu > d, through scipy's betaln.
    """
    nu = toExact(nu)
    if not nu > d:
        raise ParameterException("Beta moments need nu > d, got nu=%s d=%s" % (nu, d))
    base = betaln(d, float(nu - d))
    return [math.exp(betaln(d + m, float(nu - d)) - base) for m in range(maxIndex + 1)]


def betaCrossCheck(seq, nu):
    """ Largest relative deviation between the sequence and the Beta moments """
    reference = betaMoments(seq.d, nu, seq.maxIndex)
    return max(abs(float(value) - ref) / abs(ref) for value, ref in zip(seq.values, reference))


def wSubScan(d, nuGrid, size, tol):
    """
    _wSubScan_

    Hausdorff test of {y = nu} for every nu of the grid, next to the
    expected membership of nu in W_sub = {d} + (d, oo).
    """
    expectedSet = wSub(deriveParams(1, 2, int(d) - 1))
    rows = []
    for nu in nuGrid:
        nu = toExact(nu)
        seq = radialMoments(d, wSubType(nu), 2 * size)
        result = hausdorffTest(seq, size, tol)
        rows.append(OrderedDict([('d', int(d)), ('nu', nu), ('feasible', result.feasible),
                                 ('expected', expectedSet.contains(nu)),
                                 ('min_eig_H', result.minEigH), ('min_eig_DH', result.minEigDH)]))
    return rows

