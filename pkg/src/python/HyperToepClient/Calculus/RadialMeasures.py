"""
Radial parts of the K-invariant measures on the domain, its boundary orbits
and the Kepler varieties, their normalization by Gauss-Jacobi quadrature, and
the moments of spherical polynomials against them.

Radial coordinates are the squared singular values t (so a radial part pairs
with f(sqrt(t))). The first k coordinates are pinned at 1, the last r-lambda
are zero, the lambda-k free ones range over the ordered cell
1 > t_{k+1} >= ... >= t_lambda > 0 and carry the density

    prod t_i^powerT (1 - t_i)^powerOneMinusT  prod_{i<j} (t_i - t_j)^a.
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
import math
from collections import namedtuple

import numpy
from scipy.special import roots_jacobi

from HyperToepClient.ClientExceptions import ParameterException, ModelNotSupportedException, NumericalException
from HyperToepClient.ClientUtilities import toExact, CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import Partition, nuK, genusK, pochhammer, makeType
from HyperToepClient.Calculus.SymFunc import jackSpherical, dimIsotype, evalSym, monomialExponents

logger = logging.getLogger(CALC_LOGGER_NAME)

FAMILIES = ('lebesgue', 'kepler_riemann', 'boundary_orbit', 'bergman_weighted', 'boundary_kepler')

## Nodes per coordinate when the integrand is not polynomial.
DEFAULT_INEXACT_NODES = 200

## Upper bound on the number of grid points of a tensor rule.
MAX_GRID_POINTS = 4000000

MOMENT_TABLE_COLUMNS = ['family', 'r', 'a', 'b', 'k', 'lambda', 'nu', 'mu', 'moment', 'target', 'rel_err']


class RadialMeasureSpec(namedtuple('RadialMeasureSpec', ['family', 'params', 'k', 'lam', 'nu', 'powerT',
                                                         'powerOneMinusT', 'vandermonde', 'normConst'])):
    """
    _RadialMeasureSpec_

    normConst is None until normalize() returns the normalized copy.
    """
    __slots__ = ()

    @property
    def pinnedCount(self):
        return self.k

    @property
    def freeCount(self):
        return self.lam - self.k

    @property
    def zeroCount(self):
        return self.params.r - self.lam

    @property
    def isPointMass(self):
        return self.lam == self.k

    def describe(self):
        return "%s(r=%s, a=%s, b=%s, k=%d, lambda=%d, nu=%s)" % (self.family, self.params.r, self.params.a,
                                                                self.params.b, self.k, self.lam, self.nu)


def makeRadialSpec(params, k, lam, nu=None, family=None):
    """
    Radial part of the measure of the given family. Without a family, k = 0
    gives the weighted Bergman family and k >= 1 the boundary Kepler family.
    """
    r = params.r
    if not 0 <= k <= lam <= r:
        raise ParameterException("Need 0 <= k <= lambda <= r, got k=%s lambda=%s r=%s" % (k, lam, r))
    if family is None or family == 'auto':
        family = 'bergman_weighted' if k == 0 else 'boundary_kepler'
    if family not in FAMILIES:
        raise ParameterException("Unknown measure family '%s'; valid families are %s" % (family, ", ".join(FAMILIES)))
    a, b, p = params.a, params.b, params.p
    powerT = b + a * (r - lam)
    if family in ('lebesgue', 'boundary_orbit') and lam != r:
        raise ParameterException("The %s family lives on the full rank set, got lambda=%s" % (family, lam))
    if family in ('lebesgue', 'kepler_riemann', 'bergman_weighted'):
        if k != 0:
            raise ParameterException("The %s family has no pinned coordinates, got k=%s" % (family, k))
        if family == 'bergman_weighted':
            if nu is None:
                raise ParameterException("The weighted Bergman family needs a weight parameter nu > p - 1")
            nu = toExact(nu)
            if not nu > p - 1:
                raise ParameterException("Weight parameter nu = %s must exceed p - 1 = %s" % (nu, p - 1))
        else:
            nu = p
        powerOneMinusT = nu - p
    else:
        if k == 0:
            raise ParameterException("The %s family needs k >= 1" % family)
        nu = None
        powerOneMinusT = nuK(params, k) - genusK(params, k)
    if lam > k and not (powerT > -1 and powerOneMinusT > -1):
        raise ParameterException("Non integrable exponents t^%s (1-t)^%s" % (powerT, powerOneMinusT))
    return RadialMeasureSpec(family, params, k, lam, nu, powerT, powerOneMinusT, a, None)


def radialType(spec):
    """ The hypergeometric type generated from the same (params, k, lambda, nu) """
    return makeType(spec.params, spec.k, spec.lam, spec.nu if spec.k == 0 else None)


def admissibleSpecs(params, nu=None):
    """ Every (k, lambda) with 0 <= k <= lambda <= r; k = 0 uses nu (default p + 1) """
    nu = params.p + 1 if nu is None else nu
    for lam in range(params.r + 1):
        for k in range(lam + 1):
            if k == 0 and lam == 0:
                continue
            yield makeRadialSpec(params, k, lam, nu if k == 0 else None)


def density(spec, t):
    """
    _density_

    Unnormalized density at the free coordinates t.
    """
    if spec.isPointMass:
        raise ParameterException("%s is a point mass and has no density" % spec.describe())
    t = [float(v) for v in t]
    if len(t) != spec.freeCount:
        raise ParameterException("Expected %d free coordinates, got %d" % (spec.freeCount, len(t)))
    if not (t[0] < 1 and t[-1] > 0 and all(x >= y for x, y in zip(t, t[1:]))):
        raise ParameterException("Point %s is outside the ordered cell" % t)
    value = 1.0
    powerT, powerOneMinusT, a = float(spec.powerT), float(spec.powerOneMinusT), float(spec.vandermonde)
    for i, ti in enumerate(t):
        value *= ti ** powerT * (1 - ti) ** powerOneMinusT
        for tj in t[i+1:]:
            value *= (ti - tj) ** a
    return value


def _jacobiRule(n, alpha, beta):
    """ Gauss-Jacobi rule for t^beta (1-t)^alpha on [0, 1] """
    x, w = roots_jacobi(n, alpha, beta)
    return (1 + x) / 2, w / 2 ** (alpha + beta + 1)


class QuadratureRule(namedtuple('QuadratureRule', ['points', 'weights', 'exact', 'nodes', 'scheme'])):
    """ points has one row per free coordinate; the density is folded into the weights """
    __slots__ = ()

    def integrate(self, values):
        return math.fsum(numpy.asarray(values * self.weights, dtype=float).ravel())


def _isInteger(value):
    return value == int(value)


def buildRule(spec, degree, nodes=None):
    """
    Quadrature rule on the ordered cell, exact for polynomial integrands of
    the given total degree whenever the density allows it. Even a uses the
    symmetrized cube with |Delta|^a and a 1/m! correction; otherwise the
    ordered cell is mapped onto the cube by t_j = s_1 ... s_j.
    """
    m = spec.freeCount
    if m == 0:
        raise ParameterException("%s is a point mass and needs no quadrature" % spec.describe())
    if nodes is not None and nodes < 1:
        raise ParameterException("Need at least one quadrature node, got %s" % nodes)
    a = spec.vandermonde
    alpha, beta = float(spec.powerOneMinusT), float(spec.powerT)
    evenA = _isInteger(a) and int(a) % 2 == 0
    if m == 1 or evenA:
        exact = True
        if not nodes:
            nodes = (degree + int(a) * (m - 1) * (1 if evenA else 0)) // 2 + 2
        t, w = _jacobiRule(nodes, alpha, beta)
        grids = numpy.meshgrid(*([t] * m), indexing='ij')
        wgrids = numpy.meshgrid(*([w] * m), indexing='ij')
        points = numpy.array([g.ravel() for g in grids])
        weights = numpy.prod([g.ravel() for g in wgrids], axis=0)
        for i in range(m):
            for j in range(i + 1, m):
                weights = weights * numpy.abs(points[i] - points[j]) ** float(a)
        weights = weights / math.factorial(m)
        scheme = 'cube'
    else:
        exact = _isInteger(a) and _isInteger(spec.powerOneMinusT)
        if not nodes:
            if exact:
                nodes = (degree + int(alpha) * m + int(a) * m * (m - 1) // 2) // 2 + 2
            else:
                nodes = min(DEFAULT_INEXACT_NODES, int(MAX_GRID_POINTS ** (1.0 / m)))
        if not exact:
            logger.warning("Integrand for %s is not polynomial; using %d nodes per coordinate, expect ~1e-6 accuracy",
                           spec.describe(), nodes)
        a = float(a)
        rules = []
        for l in range(1, m + 1):
            exponent = beta * (m - l + 1) + (m - l) + a * sum(m - i for i in range(l, m))
            rules.append(_jacobiRule(nodes, alpha if l == 1 else 0.0, exponent))
        sgrids = numpy.meshgrid(*[rule[0] for rule in rules], indexing='ij')
        wgrids = numpy.meshgrid(*[rule[1] for rule in rules], indexing='ij')
        s = numpy.array([g.ravel() for g in sgrids])
        weights = numpy.prod([g.ravel() for g in wgrids], axis=0)
        points = numpy.cumprod(s, axis=0)
        for j in range(1, m):
            weights = weights * (1 - points[j]) ** alpha
        for i in range(m):
            for j in range(i + 1, m):
                weights = weights * (1 - numpy.prod(s[i+1:j+1], axis=0)) ** a
        scheme = 'ordered-cell'
    logger.debug("Quadrature for %s: %s scheme, %d nodes per coordinate, exact=%s", spec.describe(), scheme, nodes, exact)
    return QuadratureRule(points, weights, exact, nodes, scheme)


def normalize(spec, nodes=None):
    """
    _normalize_

    Normalized copy of spec: normConst makes the measure a probability measure.
    """
    if spec.isPointMass:
        return spec._replace(normConst=1)
    rule = buildRule(spec, 0, nodes)
    mass = rule.integrate(numpy.ones_like(rule.weights))
    if not (mass > 0 and math.isfinite(mass)):
        raise NumericalException("Total mass of %s is %r" % (spec.describe(), mass))
    return spec._replace(normConst=1 / mass)


def _evaluateOnGrid(pol, columns):
    """ Vectorized evaluation of a SymPoly; columns holds one array or scalar per variable """
    total = 0.0
    for kappa, value in pol.coeffs.items():
        for exponent in monomialExponents(kappa, pol.nvars):
            term = float(value)
            for col, e in zip(columns, exponent):
                if e:
                    term = term * col ** e
            total = total + term
    return total


def momentSpherical(spec, mu, nodes=None):
    """
    _momentSpherical_

    Integral of Phi_mu(1^k, t, 0^{r-lambda}) (Phi_mu in r variables) against
    the normalized measure. A point mass returns the exact evaluation.
    """
    mu = Partition(mu)
    if mu.length > spec.lam:
        raise ParameterException("Partition %s is longer than lambda = %d" % (mu, spec.lam))
    params = spec.params
    phi = jackSpherical(mu, params.r, params.a)
    if spec.isPointMass:
        return evalSym(phi, [1] * spec.k + [0] * (params.r - spec.k))
    if spec.normConst is None:
        spec = normalize(spec, nodes)
    rule = buildRule(spec, mu.size, nodes)
    columns = [1.0] * spec.k + list(rule.points) + [0.0] * spec.zeroCount
    values = _evaluateOnGrid(phi, columns) * numpy.ones_like(rule.weights)
    return float(spec.normConst) * rule.integrate(values)


MomentCheck = namedtuple('MomentCheck', ['moment', 'target', 'relErr'])


def _relErr(value, target):
    value, target = float(value), float(target)
    return abs(value - target) / abs(target) if target else abs(value)


def checkRadialMomentIdentity(spec, htype, mu, nodes=None):
    """
    _checkRadialMomentIdentity_

    Compare the moment of Phi_mu with (d/r)_mu * coefficient(mu).
    Returns MomentCheck(moment, target, relErr).
    """
    mu = Partition(mu)
    params = spec.params
    target = pochhammer(params.d / params.r, mu, params.a) * htype.coefficient(mu)
    moment = momentSpherical(spec, mu, nodes)
    return MomentCheck(moment, target, _relErr(moment, target))


def checkEmbeddedKernelMoment(params, k, mu, nodes=None):
    """
    Integral of the diagonal kernel E_e^mu = d_mu/(d/r)_mu Phi_mu against the
    boundary orbit measure with k unit singular values, compared with
    d_mu/(nu_k)_mu. Needs a concrete model (d_mu).
    """
    mu = Partition(mu)
    if not params.hasModel:
        raise ModelNotSupportedException("No concrete polynomial model for r=%s a=%s b=%s" % (params.r, params.a, params.b))
    if not 1 <= k <= params.r:
        raise ParameterException("Need 1 <= k <= r, got k=%s" % k)
    spec = makeRadialSpec(params, k, params.r, family='boundary_orbit')
    dmu = dimIsotype(mu, params)
    scale = dmu / pochhammer(params.d / params.r, mu, params.a)
    moment = momentSpherical(spec, mu, nodes) * (scale if spec.isPointMass else float(scale))
    target = dmu / pochhammer(nuK(params, k), mu, params.a)
    return MomentCheck(moment, target, _relErr(moment, target))


def degenerationChainHolds(params, k=1, nu=None):
    """
    The full rank member of each Kepler family coincides with its orbit
    family: boundary_kepler(k, r) = boundary_orbit(k) and
    kepler_riemann(r) = lebesgue = bergman_weighted(r, nu=p).
    """
    exponents = lambda spec: (spec.powerT, spec.powerOneMinusT, spec.vandermonde)
    r = params.r
    holds = exponents(makeRadialSpec(params, k, r, family='boundary_kepler')) == \
            exponents(makeRadialSpec(params, k, r, family='boundary_orbit'))
    holds = holds and exponents(makeRadialSpec(params, 0, r, family='kepler_riemann')) == \
                      exponents(makeRadialSpec(params, 0, r, family='lebesgue'))
    holds = holds and exponents(makeRadialSpec(params, 0, r, params.p, family='bergman_weighted')) == \
                      exponents(makeRadialSpec(params, 0, r, family='lebesgue'))
    if nu is not None:
        holds = holds and makeRadialSpec(params, 0, r, nu).powerOneMinusT == toExact(nu) - params.p
    return holds


def momentTableRow(spec, mu, check):
    params = spec.params
    return {'family': spec.family, 'r': params.r, 'a': params.a, 'b': params.b, 'k': spec.k,
            'lambda': spec.lam, 'nu': spec.nu, 'mu': str(Partition(mu)), 'moment': check.moment,
            'target': check.target, 'rel_err': check.relErr}
