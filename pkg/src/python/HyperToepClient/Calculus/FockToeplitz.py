"""
Toeplitz operators with polynomial symbols on the holomorphic spaces of the
hypergeometric measures, in the concrete models C^{r x s} (a = 2) and the
ball C^{1 x d}.

The space of a type (x; y; ell) is the sum of the P_mu with length(mu) <= ell,
normed by ||f||^2 = sum coefficient(mu) ||pi_mu f||^2_Fischer. Components of
length > ell vanish on the rank <= ell support, so multiplication followed by
the rank projection is the Toeplitz operator of a holomorphic symbol, and
conjugate symbols act by the adjoint.
"""

# pylint: disable=invalid-name

from __future__ import division

import json
import logging
import math
import re
from collections import namedtuple, OrderedDict
from fractions import Fraction
from itertools import permutations

from HyperToepClient.ClientExceptions import ParameterException, ModelNotSupportedException, NumericalException
from HyperToepClient.ClientUtilities import toExact, CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import Partition, partitionsUpTo, pochhammer, deriveParams, makeType
from HyperToepClient.Calculus.SymFunc import hookLengthCount
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly, fischerPairing, conjugate, permutationSign
from HyperToepClient.Calculus.IsotypeBasis import (isotypeBasis, isotypicProject, isotypicComponents,
                                                   rankProject, typeNorm2, weightSpaceBasis)
from HyperToepClient.RunReport import formatNumber

logger = logging.getLogger(CALC_LOGGER_NAME)

TYPE_CHOICES = ('bergman', 'boundary')


## models

def parseShape(text):
    """ 'RxS' -> (r, s) with 1 <= r <= s """
    match = re.match(r'^\s*(\d+)\s*[xX]\s*(\d+)\s*$', str(text))
    if not match:
        raise ParameterException("Cannot read the matrix shape '%s', expected RxS" % text)
    r, s = int(match.group(1)), int(match.group(2))
    if not 1 <= r <= s:
        raise ParameterException("Matrix shape %dx%d needs 1 <= r <= s" % (r, s))
    return r, s


def modelParams(shape=None, ball=None):
    """
    _modelParams_

    Structure constants of the matrix triple C^{r x s} (a = 2, b = s - r) or,
    when ball is given, of the ball C^d (r = 1, b = d - 1).
    """
    if ball is not None:
        if int(ball) != ball or ball < 1:
            raise ParameterException("Ball dimension must be a positive integer, got %r" % (ball,))
        return deriveParams(1, 2, int(ball) - 1)
    if isinstance(shape, str):
        shape = parseShape(shape)
    r, s = shape
    return deriveParams(r, 2, s - r)


def modelType(params, typeName, k=1, lam=None, nu=None):
    """ Type of the weighted Bergman space (k = 0) or of the boundary measure M_{k,lam} """
    if not params.hasModel:
        raise ModelNotSupportedException("No concrete polynomial model for r=%s a=%s b=%s" % (params.r, params.a, params.b))
    lam = params.r if lam is None else lam
    if typeName == 'bergman':
        return makeType(params, 0, lam, params.p if nu is None else nu)
    if typeName == 'boundary':
        return makeType(params, k, lam)
    raise ParameterException("Unknown type '%s', expected one of %s" % (typeName, ', '.join(TYPE_CHOICES)))


def matrixUnit(shape, i, j):
    r, s = shape
    return [[1 if (a, b) == (i, j) else 0 for b in range(s)] for a in range(r)]


def matrixUnits(shape):
    return [(i, j, matrixUnit(shape, i, j)) for i in range(shape[0]) for j in range(shape[1])]


## symbols

class ToeplitzSymbol(namedtuple('ToeplitzSymbol', ['poly', 'conjugated'])):
    """
    _ToeplitzSymbol_

    A holomorphic polynomial p, or its complex conjugate when conjugated is set.
    """
    __slots__ = ()

    @property
    def degree(self):
        return self.poly.degree

    def describe(self):
        text = self.poly.describe()
        return "conj(%s)" % text if self.conjugated else text


_FACTOR = re.compile(r'^z(\d)(\d)(?:\^(\d+))?$')


def parseSymbol(text, shape):
    """
    _parseSymbol_

    'z22', 'z11*z22^2', 'conj:z22' or a rational constant; indices are 1-based.
    """
    text = text.strip()
    conjugated = text.startswith('conj:')
    if conjugated:
        text = text[len('conj:'):]
    poly = MatrixPoly.constant(shape, 1)
    for factor in text.split('*'):
        factor = factor.strip()
        match = _FACTOR.match(factor)
        if match:
            i, j = int(match.group(1)) - 1, int(match.group(2)) - 1
            power = int(match.group(3) or 1)
            poly = poly * MatrixPoly.coordinate(shape, i, j) ** power
        else:
            poly = poly * toExact(factor)
    return ToeplitzSymbol(poly, conjugated)


## Fock kernels

def _matrixProduct(left, right):
    return [[sum((left[i][k] * right[k][j] for k in range(len(right))), MatrixPoly.zero(left[0][0].shape))
             for j in range(len(right[0]))] for i in range(len(left))]


def powerSums(shape, w, maxDegree):
    """ p_k = tr((z w*)^k) for 1 <= k <= maxDegree, index 0 unused """
    r, s = shape
    X = [[MatrixPoly.linearForm(shape, [[w[kk][b] if a == i else 0 for b in range(s)] for a in range(r)])
          for kk in range(r)] for i in range(r)]
    result = [None]
    power = X
    for _ in range(maxDegree):
        result.append(sum((power[i][i] for i in range(r)), MatrixPoly.zero(shape)))
        power = _matrixProduct(power, X)
    return result


def _completeSums(p, maxDegree, shape):
    h = [MatrixPoly.constant(shape, 1)]
    for k in range(1, maxDegree + 1):
        total = MatrixPoly.zero(shape)
        for i in range(1, k + 1):
            total = total + p[i] * h[k - i]
        h.append(total * Fraction(1, k))
    return h


def _jacobiTrudi(mu, h, shape):
    ell = mu.length
    entries = [[mu[i] - i + j for j in range(ell)] for i in range(ell)]
    result = MatrixPoly.zero(shape)
    for perm in permutations(range(ell)):
        term = MatrixPoly.constant(shape, permutationSign(perm))
        for i, j in enumerate(perm):
            index = entries[i][j]
            if index < 0:
                term = MatrixPoly.zero(shape)
                break
            term = term * h[index]
        result = result + term
    return result


def fockKernel(mu, w, shape):
    """
    _fockKernel_

    E^mu(z, w) = f^mu/|mu|! s_mu(z w*), the P_mu component of exp((z|w)).
    """
    mu = Partition(mu)
    if mu.length > min(shape):
        raise ParameterException("Partition %s is longer than min%s" % (mu, shape))
    p = powerSums(shape, w, mu.size)
    h = _completeSums(p, mu.size, shape)
    schurPart = _jacobiTrudi(mu, h, shape)
    return schurPart * Fraction(hookLengthCount(mu), math.factorial(mu.size))


def kernelExpansion(nu, w, maxDegree, params):
    """
    _kernelExpansion_

    Returns (sum_{|mu| <= D} (nu)_mu E^mu(z, w), degree <= D Taylor part of
    det(1 - z w*)^{-nu}); the two agree exactly.
    """
    shape = params.shape
    nu = toExact(nu)
    expansion = MatrixPoly.zero(shape)
    for mu in partitionsUpTo(maxDegree, min(shape)):
        expansion = expansion + fockKernel(mu, w, shape) * pochhammer(nu, mu, params.a)
    p = powerSums(shape, w, maxDegree)
    logDet = MatrixPoly.zero(shape)
    for k in range(1, maxDegree + 1):
        logDet = logDet + p[k] * (nu / k)
    taylor, term = MatrixPoly.constant(shape, 1), MatrixPoly.constant(shape, 1)
    for n in range(1, maxDegree + 1):
        term = (term * logDet).truncated(maxDegree) * Fraction(1, n)
        taylor = taylor + term
    return expansion, taylor


def conicalPolynomial(mu, shape):
    """ N_mu = prod_j Delta_j^(m_j - m_{j+1}), Delta_j the leading principal minors """
    mu = Partition(mu)
    if mu.length > min(shape):
        raise ParameterException("Partition %s is longer than min%s" % (mu, shape))
    result = MatrixPoly.constant(shape, 1)
    for j in range(1, mu.length + 1):
        minor = MatrixPoly.minor(shape, list(range(j)), list(range(j)))
        result = result * minor ** (mu.part(j) - mu.part(j + 1))
    return result


def conicalNormRatio(lam, m1, shape, a=2):
    """
    _conicalNormRatio_

    ||N_m||^2 / ||N_lam^c||^2 for m = (m1, lam) with m1 >= lam_1, N_lam^c the
    conical polynomial of lam on the Peirce-0 block of e_11. Returns
    (computed, closedForm) where
    closedForm = (1 + a/2 (ell-1))_{m1} prod_{j<ell} (1 + a/2 (j-1))_{m1-lam_j} / (1 + a/2 j)_{m1-lam_j}.
    """
    lam = Partition(lam)
    if m1 < lam.part(1):
        raise ParameterException("m1 = %d must be at least lambda_1 = %d" % (m1, lam.part(1)))
    m = Partition((m1,) + tuple(lam))
    ell = m.length
    r, s = shape
    computed = fischerPairing(conicalPolynomial(m, shape), conicalPolynomial(m, shape))
    reduced = conicalPolynomial(lam, (r - 1, s - 1)) if r > 1 else MatrixPoly.constant((0, s - 1), 1)
    computed = computed / fischerPairing(reduced, reduced)
    half = Fraction(a) / 2
    closed = _rising(1 + half * (ell - 1), m1)
    for j in range(1, ell):
        closed *= _rising(1 + half * (j - 1), m1 - lam.part(j)) / _rising(1 + half * j, m1 - lam.part(j))
    return computed, closed


def _rising(x, n):
    result = Fraction(1)
    for i in range(n):
        result *= x + i
    return result


## Toeplitz operators

def _ratio(htype, mu, j):
    """ coefficient(mu) / coefficient(mu - eps_j) """
    shift = htype.a / 2 * (j - 1) - mu.part(j) + 1
    num, den = Fraction(1), Fraction(1)
    for x in htype.x:
        num *= x - shift
    for y in htype.y:
        den *= y - shift
    if den == 0:
        raise ParameterException("Pole of the type %s lowering %s at row %d" % (htype.describe(), mu, j))
    return num / den


def adjointClosedForm(htype, v, mu, p):
    """
    _adjointClosedForm_

    T(conj(v*)) p for p in P_mu:
    sum_j coefficient(mu)/coefficient(mu - eps_j) pi_{mu - eps_j}(d_v p).
    """
    mu = Partition(mu)
    if mu.length > htype.ell:
        raise ParameterException("Partition %s is longer than the rank bound %d" % (mu, htype.ell))
    derivative = p.directionalDerivative(v)
    result = MatrixPoly.zero(p.shape)
    if not derivative:
        return result
    for j in range(1, mu.length + 1):
        lower = mu.removeBox(j)
        if lower is None:
            continue
        piece = isotypicProject(derivative, lower)
        if piece:
            result = result + piece * _ratio(htype, mu, j)
    return result


def adjointBruteForce(htype, v, mu, p):
    """
    _adjointBruteForce_

    T(conj(v*)) p for p in P_mu from (T(conj(v*)) p | b) = (p | v* b) over the
    basis vectors b of the P_{mu - eps_j}, weight space by weight space.
    """
    mu = Partition(mu)
    shape = p.shape
    r, s = shape
    if mu.length > htype.ell:
        raise ParameterException("Partition %s is longer than the rank bound %d" % (mu, htype.ell))
    multiplier = MatrixPoly.linearForm(shape, v)
    weights = set()
    for exponent in p.coeffs:
        rows, cols = p.weightOf(exponent)
        for a in range(r):
            for b in range(s):
                if v[a][b] != 0 and rows[a] and cols[b]:
                    lowered = (tuple(n - (i == a) for i, n in enumerate(rows)),
                               tuple(n - (j == b) for j, n in enumerate(cols)))
                    weights.add(lowered)
    coefficientMu = htype.coefficient(mu)
    result = MatrixPoly.zero(shape)
    for rows, cols in sorted(weights):
        for lower, vectors in weightSpaceBasis(shape, rows, cols).items():
            if not _isBelow(lower, mu):
                continue
            coefficientLower = htype.coefficient(lower)
            for vector, norm in vectors:
                if norm == 0 or coefficientLower == 0:
                    raise NumericalException("Singular Gram entry for %s" % (lower,))
                pairing = fischerPairing(multiplier * vector, p)
                if pairing != 0:
                    result = result + vector * (coefficientMu / coefficientLower * pairing / norm)
    return result


def _isBelow(lower, mu):
    return any(mu.removeBox(j) == lower for j in range(1, mu.length + 1))


def adjointApply(htype, v, f):
    """ T(conj(v*)) f for any f in the space of the type """
    result = MatrixPoly.zero(f.shape)
    for mu, piece in isotypicComponents(f).items():
        result = result + adjointClosedForm(htype, v, mu, piece)
    return result


def toeplitzApply(htype, symbol, f):
    """
    _toeplitzApply_

    T(symbol) f. Holomorphic symbols multiply and project to rank <= ell;
    a conjugated monomial acts by the product of the adjoints of its linear
    factors, which commute.
    """
    if f.shape != symbol.poly.shape:
        raise ParameterException("Symbol of shape %s applied to a polynomial of shape %s" % (symbol.poly.shape, f.shape))
    if not symbol.conjugated:
        return rankProject(symbol.poly * f, htype.ell)
    shape = f.shape
    result = MatrixPoly.zero(shape)
    for exponent, coeff in symbol.poly.coeffs.items():
        term = f
        for index, power in enumerate(exponent):
            unit = matrixUnit(shape, *divmod(index, shape[1]))
            for _ in range(power):
                term = adjointApply(htype, unit, term)
        result = result + term * conjugate(coeff)
    return result


def typeNorm(htype, f):
    return float(typeNorm2(htype, f)) ** 0.5


def checkMultiplicativity(htype, p, q, phi, maxDegree):
    """
    _checkMultiplicativity_

    T(pq) phi == T(p) T(q) phi for holomorphic p, q.
    """
    if p.degree + q.degree + phi.degree > maxDegree:
        raise ParameterException("Degrees %d + %d + %d exceed the truncation degree %d"
                                 % (p.degree, q.degree, phi.degree, maxDegree))
    lhs = toeplitzApply(htype, ToeplitzSymbol(p * q, False), phi)
    rhs = toeplitzApply(htype, ToeplitzSymbol(p, False), toeplitzApply(htype, ToeplitzSymbol(q, False), phi))
    return lhs == rhs


class ToeplitzBlockMatrix(namedtuple('ToeplitzBlockMatrix', ['type', 'degree', 'blocks', 'bases'])):
    """
    _ToeplitzBlockMatrix_

    blocks[(mu_out, mu_in)][i][k] is the coordinate of T b_k^{mu_in} along
    b_i^{mu_out} in the unnormalized isotype bases kept in bases[mu].
    """
    __slots__ = ()

    def nonzeroBlocks(self):
        return sorted(key for key, block in self.blocks.items() if any(any(row) for row in block))


def toeplitzMatrix(htype, symbol, maxDegree, shape):
    """
    _toeplitzMatrix_

    Truncation of T(symbol) to the isotypes with |mu| <= D and
    length(mu) <= ell. Entries between retained isotypes are exact.
    """
    if maxDegree < symbol.degree:
        raise ParameterException("Truncation degree %d is smaller than the symbol degree %d" % (maxDegree, symbol.degree))
    retained = [mu for mu in partitionsUpTo(maxDegree, min(shape)) if mu.length <= htype.ell]
    bases = OrderedDict((mu, isotypeBasis(shape, mu)) for mu in retained)
    blocks = {}
    for muIn in retained:
        basisIn = bases[muIn]
        columns = [isotypicComponents(toeplitzApply(htype, symbol, vector)) for vector in basisIn.vectors]
        for muOut in retained:
            basisOut = bases[muOut]
            block = [[Fraction(0)] * basisIn.dimension for _ in range(basisOut.dimension)]
            touched = False
            for k, components in enumerate(columns):
                piece = components.get(muOut)
                if piece is None:
                    continue
                touched = True
                for i, (vector, norm) in enumerate(zip(basisOut.vectors, basisOut.gram)):
                    block[i][k] = fischerPairing(vector, piece) / norm
            if touched:
                blocks[(muOut, muIn)] = block
    logger.debug("Assembled %d blocks of T(%s) up to degree %d", len(blocks), symbol.describe(), maxDegree)
    return ToeplitzBlockMatrix(htype, maxDegree, blocks, bases)


def blockSparsityHolds(matrix, raising):
    """ Every nonzero block of T(v*) raises one box, of T(conj(v*)) lowers one """
    for muOut, muIn in matrix.nonzeroBlocks():
        upper, lower = (muOut, muIn) if raising else (muIn, muOut)
        if not _isBelow(lower, upper):
            return False
    return True


def adjointRelationHolds(raisingMatrix, loweringMatrix):
    """
    _adjointRelationHolds_

    With respect to the type weighted Gram,
    B[k][i] coefficient(nu) g^nu_k == conj(A[i][k]) coefficient(mu) g^mu_i
    for A the block (mu, nu) of T(v*) and B the block (nu, mu) of T(conj(v*)).
    """
    htype = raisingMatrix.type
    keys = set(raisingMatrix.blocks) | set((muIn, muOut) for muOut, muIn in loweringMatrix.blocks)
    for mu, nu in keys:
        if mu not in raisingMatrix.bases or nu not in raisingMatrix.bases:
            continue
        gMu, gNu = raisingMatrix.bases[mu].gram, raisingMatrix.bases[nu].gram
        A = raisingMatrix.blocks.get((mu, nu))
        B = loweringMatrix.blocks.get((nu, mu))
        for i in range(len(gMu)):
            for k in range(len(gNu)):
                a = A[i][k] if A else 0
                b = B[k][i] if B else 0
                if b * htype.coefficient(nu) * gNu[k] != conjugate(toExact(a)) * htype.coefficient(mu) * gMu[i]:
                    return False
    return True


def ballShiftWeights(htype, d, maxDegree):
    """
    T(conj(z_1)) z_1^m = w_m z_1^(m-1) on the ball C^d; returns
    [(m, w_m, expected)]; expected is m/(nu+m-1) for the type {y = nu}
    and m c((m))/c((m-1)) from the type coefficients otherwise.
    """
    shape = (1, d)
    unit = matrixUnit(shape, 0, 0)
    simple = htype.cancelled()
    rows = []
    for m in range(1, maxDegree + 1):
        image = adjointApply(htype, unit, MatrixPoly.coordinate(shape, 0, 0) ** m)
        lower = MatrixPoly.coordinate(shape, 0, 0) ** (m - 1)
        weight = image.coefficient(next(iter(lower.coeffs)))
        if not simple.x and len(simple.y) == 1:
            expected = Fraction(m) / (simple.y[0] + m - 1)
        else:
            expected = m * htype.coefficient(Partition((m,))) / htype.coefficient(Partition((m - 1,)))
        rows.append((m, weight, expected))
    return rows


def dumpBlockMatrix(matrix):
    """
    _dumpBlockMatrix_

    JSON text of the blocks keyed by "mu_out|mu_in", entries as rational strings.
    """
    blocks = OrderedDict()
    for muOut, muIn in sorted(matrix.blocks):
        key = "%s|%s" % (muOut, muIn)
        blocks[key] = [[formatNumber(toExact(entry)) for entry in row] for row in matrix.blocks[(muOut, muIn)]]
    payload = OrderedDict([('type', matrix.type.describe()), ('degree', matrix.degree),
                           ('dimensions', OrderedDict((str(mu), basis.dimension) for mu, basis in matrix.bases.items())),
                           ('blocks', blocks)])
    return json.dumps(payload, indent=1)
