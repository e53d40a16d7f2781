#!/usr/bin/env python
# encoding: utf-8
"""
MatrixPoly_t.py
"""

import unittest
from fractions import Fraction

import numpy

from HyperToepClient.ClientExceptions import ParameterException
from HyperToepClient.Calculus.MatrixPoly import (MatrixPoly, fischerPairing, fischerNorm2, diagonalTripotent,
                                                 restrictSymbol, embedPeirceZero, randomPolynomial)

SHAPE = (2, 2)


def z(i, j, shape=SHAPE):
    return MatrixPoly.coordinate(shape, i - 1, j - 1)


class ArithmeticTest(unittest.TestCase):

    def testConstruction(self):
        self.assertEqual(MatrixPoly(SHAPE, {(1, 0, 0, 0): 2, (0, 0, 0, 1): 0}).coeffs, {(1, 0, 0, 0): 2})
        self.assertRaises(ParameterException, MatrixPoly, SHAPE, {(1, 0, 0): 1})
        self.assertRaises(ParameterException, MatrixPoly, SHAPE, {(1, 0, 0, -1): 1})
        self.assertRaises(ParameterException, MatrixPoly.coordinate, SHAPE, 2, 0)

    def testRing(self):
        p = z(1, 1) + z(2, 2)
        self.assertEqual(p * p, z(1, 1) ** 2 + 2 * z(1, 1) * z(2, 2) + z(2, 2) ** 2)
        self.assertTrue((p - p).isZero())
        self.assertEqual(1 + z(1, 2), z(1, 2) + MatrixPoly.constant(SHAPE, 1))
        self.assertEqual((z(1, 1) * 3) / 3, z(1, 1))
        self.assertRaises(ParameterException, lambda: z(1, 1) + z(1, 1, (1, 2)))

    def testStructure(self):
        p = z(1, 1) * z(1, 2) ** 2 + z(2, 1) + 5
        self.assertEqual(p.degree, 3)
        self.assertEqual(p.degrees(), [0, 1, 3])
        self.assertEqual(p.homogeneousPart(1), z(2, 1))
        self.assertEqual(p.truncated(1), z(2, 1) + 5)
        self.assertEqual(p.weightOf((1, 2, 0, 1)), ((3, 1), (1, 3)))
        self.assertEqual(set(p.splitByWeight()), set([((3, 0), (1, 2)), ((0, 1), (1, 0)), ((0, 0), (0, 0))]))
        self.assertEqual(p.evaluate([[1, 2], [3, 4]]), 1 * 4 + 3 + 5)

    def testMinorAndDescribe(self):
        det = MatrixPoly.minor(SHAPE, [0, 1], [0, 1])
        self.assertEqual(det, z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1))
        self.assertEqual(z(1, 2).describe(), "1*z12")
        self.assertEqual(MatrixPoly.zero(SHAPE).describe(), "0")

    def testDerivative(self):
        p = z(1, 1) ** 3 * z(2, 2)
        self.assertEqual(p.derivative(0, 0), 3 * z(1, 1) ** 2 * z(2, 2))
        self.assertEqual(p.directionalDerivative([[1, 0], [0, 2]]), 3 * z(1, 1) ** 2 * z(2, 2) + 2 * z(1, 1) ** 3)


class FischerTest(unittest.TestCase):

    def testMonomialNorms(self):
        self.assertEqual(fischerNorm2(z(1, 1) ** 2 * z(1, 2)), 2)
        self.assertEqual(fischerPairing(z(1, 1) ** 2, z(1, 1) * z(1, 2)), 0)
        self.assertEqual(fischerNorm2(MatrixPoly.minor(SHAPE, [0, 1], [0, 1])), 2)

    def testDerivativeIsAdjoint(self):
        """ ((z|v) p | q) = (p | d_v q) """
        v = [[Fraction(1, 2), 0], [3, Fraction(-2, 3)]]
        rng = numpy.random.default_rng(11)
        for _ in range(20):
            p = randomPolynomial(SHAPE, 3, rng)
            q = randomPolynomial(SHAPE, 4, rng)
            self.assertEqual(fischerPairing(MatrixPoly.linearForm(SHAPE, v) * p, q),
                             fischerPairing(p, q.directionalDerivative(v)))

    def testRandomPolynomial(self):
        rng = numpy.random.default_rng(5)
        p = randomPolynomial((1, 3), 4, rng)
        self.assertEqual(p.shape, (1, 3))
        self.assertLessEqual(p.degree, 4)


class PeirceTest(unittest.TestCase):

    def testTripotent(self):
        self.assertEqual(diagonalTripotent((2, 3), 1), [[1, 0, 0], [0, 0, 0]])
        self.assertRaises(ParameterException, diagonalTripotent, (2, 3), 3)

    def testRestrict(self):
        f = z(1, 1) * z(2, 2) + z(1, 2) + 3
        restricted = restrictSymbol(f, 1)
        self.assertEqual(restricted.shape, (1, 1))
        self.assertEqual(restricted, MatrixPoly.coordinate((1, 1), 0, 0) + 3)
        self.assertEqual(restrictSymbol(f, 2), MatrixPoly.constant((0, 0), 4))

    def testEmbed(self):
        g = MatrixPoly.coordinate((1, 2), 0, 1)
        self.assertEqual(embedPeirceZero(g, (2, 3), 1), z(2, 3, (2, 3)))
        self.assertEqual(restrictSymbol(embedPeirceZero(g, (2, 3), 1), 1), g)
        self.assertRaises(ParameterException, embedPeirceZero, g, (2, 2), 1)


if __name__ == '__main__':
    unittest.main()
