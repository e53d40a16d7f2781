#!/usr/bin/env python
# encoding: utf-8
"""
BoundaryRep_t.py
"""

import math
import unittest
from fractions import Fraction

from HyperToepClient.ClientExceptions import ParameterException, InconclusiveException
from HyperToepClient.Calculus.DomainParams import limitType
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly
from HyperToepClient.Calculus.FockToeplitz import modelParams, modelType, parseSymbol
from HyperToepClient.Calculus.BoundaryRep import (faceLimitType, peakingPolynomial, peakingTailBound, truncationDegree,
                                                  boundaryResidual, residualSequence, eventuallyDecreasing,
                                                  boundaryValue)

DISC = (1, 1)


class PeakingFunctionTest(unittest.TestCase):

    def testTaylorPolynomial(self):
        zeta = MatrixPoly.coordinate((1, 2), 0, 0)
        expected = 1 + 2 * zeta + 2 * zeta ** 2 + Fraction(4, 3) * zeta ** 3
        self.assertEqual(peakingPolynomial((1, 2), 2, 3), expected)
        diagonal = peakingPolynomial((2, 2), 1, 1, 2)
        self.assertEqual(diagonal, 1 + MatrixPoly.coordinate((2, 2), 0, 0) + MatrixPoly.coordinate((2, 2), 1, 1))

    def testTailBound(self):
        htype = modelType(modelParams(ball=1), 'bergman')
        bounds = [peakingTailBound(htype, 3, degree) for degree in (10, 20, 40)]
        self.assertTrue(bounds[0] > bounds[1] > bounds[2])
        degree = truncationDegree(htype, 3, 1e-6)
        self.assertLess(peakingTailBound(htype, 3, degree), 1e-6)
        self.assertGreaterEqual(peakingTailBound(htype, 3, degree - 1), 1e-6)

    def testFaceLimitType(self):
        htype = modelType(modelParams('3x3'), 'boundary', 1, 3)
        self.assertEqual(faceLimitType(htype, 2), limitType(limitType(htype)))
        self.assertEqual(faceLimitType(htype, 1).ell, 2)


class ResidualTest(unittest.TestCase):

    def setUp(self):
        self.htype = modelType(modelParams(ball=1), 'bergman')
        self.q = MatrixPoly.constant((0, 0), 1)

    def testDiscResidualDecays(self):
        for text in ('z11', 'conj:z11'):
            results = residualSequence(self.htype, parseSymbol(text, DISC), self.q, range(1, 9))
            residuals = [result.residual for result in results]
            self.assertLess(residuals[-1], residuals[0], text)
            self.assertLessEqual(eventuallyDecreasing(residuals), len(residuals) // 2, text)
            self.assertTrue(all(result.tailBound < 1e-3 for result in results))

    def testConstantSymbol(self):
        result = boundaryResidual(self.htype, parseSymbol('5', DISC), self.q, 4)
        self.assertEqual(result.residual, 0.0)

    def testInconclusive(self):
        symbol = parseSymbol('z11', DISC)
        with self.assertRaises(InconclusiveException) as context:
            boundaryResidual(self.htype, symbol, self.q, 5, degree=1)
        self.assertGreaterEqual(context.exception.tailBound, 1e-3)

    def testInconclusiveConjugate(self):
        symbol = parseSymbol('conj:z11', DISC)
        tailBound = peakingTailBound(self.htype, 2, 2)
        self.assertGreaterEqual(tailBound, 1e-2)
        with self.assertRaises(InconclusiveException) as context:
            boundaryResidual(self.htype, symbol, self.q, 2, degree=2, tol=1e-2)
        self.assertEqual(context.exception.tailBound, tailBound)
        self.assertEqual(context.exception.exitcode, 1)

    def testRankTwoTripotent(self):
        htype = modelType(modelParams('2x2'), 'bergman')
        symbol = parseSymbol('z11', (2, 2))
        q = MatrixPoly.constant((0, 0), 1)
        ## (z11 - 1)(1 + z11 + z22) against 1 + z11 + z22, weights 1/(4)_mu
        result = boundaryResidual(htype, symbol, q, 1, degree=1, tol=1, i=2)
        self.assertEqual(result.degree, 1)
        self.assertAlmostEqual(result.residual, math.sqrt(Fraction(17, 18)), places=12)
        self.assertLess(result.tailBound, 1)
        self.assertEqual(boundaryResidual(htype, parseSymbol('3', (2, 2)), q, 1, degree=1, tol=1, i=2).residual, 0.0)
        with self.assertRaises(InconclusiveException):
            boundaryResidual(htype, symbol, q, 1, degree=1, tol=1e-3, i=2)

    def testErrors(self):
        symbol = parseSymbol('z11', DISC)
        self.assertRaises(ParameterException, boundaryResidual, self.htype, symbol, self.q, 2, None, 1e-3, 0)
        self.assertRaises(ParameterException, boundaryResidual, self.htype, symbol, self.q, 2, None, 1e-3, 2)
        self.assertRaises(ParameterException, boundaryResidual, self.htype, symbol, MatrixPoly.constant((1, 1), 1), 2)
        self.assertRaises(ParameterException, boundaryResidual, self.htype, parseSymbol('z11^2', DISC), self.q, 2, 1)


class HelpersTest(unittest.TestCase):

    def testEventuallyDecreasing(self):
        self.assertEqual(eventuallyDecreasing([3, 1, 2, 1, 0.5]), 2)
        self.assertEqual(eventuallyDecreasing([3, 2, 1]), 0)
        self.assertEqual(eventuallyDecreasing([1, 2]), 1)
        self.assertEqual(eventuallyDecreasing([1, 1, 1]), 0)

    def testBoundaryValue(self):
        self.assertEqual(boundaryValue(parseSymbol('3*z11', DISC)), 3)
        self.assertEqual(boundaryValue(parseSymbol('conj:z11', DISC)), 1)
        self.assertEqual(boundaryValue(parseSymbol('z11*z22', (2, 2)), 2), 1)
        self.assertEqual(boundaryValue(parseSymbol('z12', (2, 2)), 2), 0)
        self.assertEqual(boundaryValue(parseSymbol('z22', (2, 2)), 1), None)


if __name__ == '__main__':
    unittest.main()
