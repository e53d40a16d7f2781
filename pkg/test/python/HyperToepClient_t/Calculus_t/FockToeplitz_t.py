#!/usr/bin/env python
# encoding: utf-8
"""
FockToeplitz_t.py
"""

import json
import math
import unittest
from fractions import Fraction

import numpy

from HyperToepClient.ClientExceptions import ParameterException, ModelNotSupportedException
from HyperToepClient.Calculus.DomainParams import Partition, partitionsOf, partitionsUpTo, deriveParams, makeType
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly, randomPolynomial
from HyperToepClient.Calculus.IsotypeBasis import isotypeBasis, rankProject
from HyperToepClient.Calculus.FockToeplitz import (parseShape, modelParams, modelType, matrixUnits, parseSymbol,
                                                   ToeplitzSymbol, fockKernel, kernelExpansion, conicalNormRatio,
                                                   adjointClosedForm, adjointBruteForce, toeplitzApply,
                                                   checkMultiplicativity, toeplitzMatrix, blockSparsityHolds,
                                                   adjointRelationHolds, ballShiftWeights, dumpBlockMatrix, typeNorm)

SHAPE = (2, 2)

W = [[Fraction(1, i + j + 2) for j in range(2)] for i in range(2)]


def z(i, j, shape=SHAPE):
    return MatrixPoly.coordinate(shape, i - 1, j - 1)


class ModelTest(unittest.TestCase):

    def testParseShape(self):
        self.assertEqual(parseShape('2x3'), (2, 3))
        self.assertEqual(parseShape(' 1 X 4 '), (1, 4))
        self.assertRaises(ParameterException, parseShape, '3x2')
        self.assertRaises(ParameterException, parseShape, 'square')

    def testModelParams(self):
        self.assertEqual(modelParams('2x2'), deriveParams(2, 2, 0))
        self.assertEqual(modelParams((2, 3)), deriveParams(2, 2, 1))
        self.assertEqual(modelParams(ball=3), deriveParams(1, 2, 2))
        self.assertRaises(ParameterException, modelParams, ball=0)

    def testModelType(self):
        sp = modelParams('2x2')
        self.assertEqual(modelType(sp, 'bergman'), makeType(sp, 0, 2, 4))
        self.assertEqual(modelType(sp, 'bergman', nu=5), makeType(sp, 0, 2, 5))
        self.assertEqual(modelType(sp, 'boundary', 1, 1), makeType(sp, 1, 1))
        self.assertRaises(ParameterException, modelType, sp, 'hardy')
        self.assertRaises(ModelNotSupportedException, modelType, deriveParams(2, 1, 0), 'bergman')

    def testParseSymbol(self):
        symbol = parseSymbol('z11*z22^2', SHAPE)
        self.assertEqual(symbol.poly, z(1, 1) * z(2, 2) ** 2)
        self.assertFalse(symbol.conjugated)
        self.assertEqual(symbol.degree, 3)
        conj = parseSymbol('conj:z22', SHAPE)
        self.assertTrue(conj.conjugated)
        self.assertEqual(conj.describe(), "conj(1*z22)")
        self.assertEqual(parseSymbol('3/2', SHAPE).poly, MatrixPoly.constant(SHAPE, Fraction(3, 2)))
        self.assertRaises(ParameterException, parseSymbol, 'z31', SHAPE)


class KernelTest(unittest.TestCase):

    def testKernelsSumToExponential(self):
        """ sum over |mu| = n of E^mu(z, w) is (z|w)^n / n! """
        pairing = MatrixPoly.linearForm(SHAPE, W)
        for n in range(4):
            total = MatrixPoly.zero(SHAPE)
            for mu in partitionsOf(n, 2):
                total = total + fockKernel(mu, W, SHAPE)
            self.assertEqual(total, pairing ** n * Fraction(1, math.factorial(n)))

    def testKernelInIsotype(self):
        kernel = fockKernel((1, 1), W, SHAPE)
        det = z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1)
        self.assertEqual(kernel, det * Fraction(W[0][0] * W[1][1] - W[0][1] * W[1][0], 2))

    def testExpansion(self):
        for nu in (4, Fraction(5, 2), 1):
            expansion, taylor = kernelExpansion(nu, W, 3, modelParams('2x2'))
            self.assertEqual(expansion, taylor)

    def testConicalNorms(self):
        for lam in [(), (1,), (2,)]:
            for m1 in range(max(Partition(lam).part(1), 1), 4):
                computed, closed = conicalNormRatio(lam, m1, SHAPE)
                self.assertEqual(computed, closed)
        self.assertEqual(conicalNormRatio((1,), 2, SHAPE), (3, 3))
        self.assertRaises(ParameterException, conicalNormRatio, (2,), 1, SHAPE)


class AdjointTest(unittest.TestCase):

    def testClosedFormMatchesBruteForce(self):
        sp = modelParams('2x2')
        for htype in (modelType(sp, 'boundary', 1, 2), modelType(sp, 'bergman', nu=Fraction(7, 2))):
            for mu in partitionsUpTo(3, 2):
                if not mu:
                    continue
                for vector in isotypeBasis(SHAPE, mu).vectors:
                    for i, j, unit in matrixUnits(SHAPE):
                        self.assertEqual(adjointClosedForm(htype, unit, mu, vector),
                                         adjointBruteForce(htype, unit, mu, vector))

    def testBallShift(self):
        htype = modelType(modelParams(ball=2), 'bergman')
        for m, weight, expected in ballShiftWeights(htype, 2, 5):
            self.assertEqual(weight, expected)
            self.assertEqual(weight, Fraction(m, 3 + m - 1))

    def testConjugateSymbol(self):
        htype = modelType(modelParams(ball=2), 'bergman')
        zeta = z(1, 1, (1, 2))
        image = toeplitzApply(htype, parseSymbol('conj:z11', (1, 2)), zeta ** 2)
        self.assertEqual(image, zeta * Fraction(1, 2))
        self.assertTrue(toeplitzApply(htype, parseSymbol('conj:z12', (1, 2)), zeta ** 2).isZero())

    def testTypeNorm(self):
        htype = modelType(modelParams(ball=2), 'bergman')
        zeta = z(1, 1, (1, 2))
        self.assertAlmostEqual(typeNorm(htype, zeta ** 2), (1.0 / 6) ** 0.5)
        self.assertAlmostEqual(typeNorm(htype, 2 * zeta), 2 * (1.0 / 3) ** 0.5)


class ToeplitzTest(unittest.TestCase):

    def testRankProjection(self):
        htype = modelType(modelParams('2x2'), 'boundary', 1, 1)
        image = toeplitzApply(htype, ToeplitzSymbol(z(2, 2), False), z(1, 1))
        self.assertEqual(image, (z(1, 1) * z(2, 2) + z(1, 2) * z(2, 1)) / 2)
        self.assertRaises(ParameterException, toeplitzApply, htype, ToeplitzSymbol(z(1, 1, (1, 2)), False), z(1, 1))

    def testMultiplicativity(self):
        htype = modelType(modelParams('2x2'), 'boundary', 1, 1)
        self.assertTrue(checkMultiplicativity(htype, z(1, 1), z(2, 2) + 1, z(1, 2), 3))
        self.assertRaises(ParameterException, checkMultiplicativity, htype, z(1, 1), z(2, 2), z(1, 2), 2)

    def testSeededMultiplicativity(self):
        for typeArgs in (('boundary', 1, 1), ('boundary', 1, 2), ('bergman',)):
            htype = modelType(modelParams('2x2'), *typeArgs)
            rng = numpy.random.default_rng(11)
            for _ in range(3):
                p, q, phi = [randomPolynomial(SHAPE, 2, rng) for _ in range(3)]
                self.assertTrue(checkMultiplicativity(htype, p, q, rankProject(phi, htype.ell), 6), typeArgs)

    def testBallShiftOtherWeight(self):
        htype = modelType(modelParams(ball=1), 'bergman', nu=Fraction(5, 2))
        rows = ballShiftWeights(htype, 1, 3)
        self.assertEqual([expected for _, _, expected in rows], [Fraction(2, 5), Fraction(4, 7), Fraction(2, 3)])
        for m, weight, expected in rows:
            self.assertEqual(weight, expected, m)

    def testBlockMatrices(self):
        sp = modelParams('2x2')
        htype = modelType(sp, 'boundary', 1, 2)
        v = [[1, 2], [0, Fraction(1, 3)]]
        raising = toeplitzMatrix(htype, ToeplitzSymbol(MatrixPoly.linearForm(SHAPE, v), False), 3, SHAPE)
        lowering = toeplitzMatrix(htype, ToeplitzSymbol(MatrixPoly.linearForm(SHAPE, v), True), 3, SHAPE)
        self.assertTrue(blockSparsityHolds(raising, True))
        self.assertTrue(blockSparsityHolds(lowering, False))
        self.assertFalse(blockSparsityHolds(raising, False))
        self.assertTrue(adjointRelationHolds(raising, lowering))
        self.assertIn((Partition((1,)), Partition(())), raising.nonzeroBlocks())
        payload = json.loads(dumpBlockMatrix(raising))
        self.assertEqual(payload['degree'], 3)
        self.assertEqual(payload['dimensions'][str(Partition((1,)))], 4)

    def testTruncationTooSmall(self):
        htype = modelType(modelParams('2x2'), 'bergman')
        self.assertRaises(ParameterException, toeplitzMatrix, htype, parseSymbol('z11*z22', SHAPE), 1, SHAPE)


if __name__ == '__main__':
    unittest.main()
