#!/usr/bin/env python
# encoding: utf-8
"""
SymFunc_t.py
"""

import unittest
from fractions import Fraction

from HyperToepClient.ClientExceptions import ParameterException, ModelNotSupportedException
from HyperToepClient.Calculus.DomainParams import Partition, partitionsUpTo, deriveParams
from HyperToepClient.Calculus.SymFunc import (SymPoly, evalSym, schur, principalSpec, jackSpherical, dimIsotype,
                                              kostkaNumber, hookLengthCount, monomialCount)


class SchurTest(unittest.TestCase):

    def testExamples(self):
        self.assertEqual(schur((1,), 2), SymPoly(2, {(1,): 1}))
        self.assertEqual(schur((1, 1), 2), SymPoly(2, {(1, 1): 1}))
        self.assertEqual(schur((2, 1), 2), SymPoly(2, {(2, 1): 1}))
        self.assertEqual(schur((2,), 2), SymPoly(2, {(2,): 1, (1, 1): 1}))
        self.assertRaises(ParameterException, schur, (1, 1, 1), 2)

    def testPrincipalSpec(self):
        self.assertEqual(principalSpec((1,), 2), 2)
        self.assertEqual(principalSpec((2, 1), 2), 2)
        self.assertEqual(principalSpec((1, 1), 3), 3)
        for mu in partitionsUpTo(5, 3):
            self.assertEqual(principalSpec(mu, 3), schur(mu, 3).atOnes())
            self.assertEqual(evalSym(schur(mu, 3), [1, 1, 1]), principalSpec(mu, 3))

    def testCounts(self):
        self.assertEqual(hookLengthCount((2, 1)), 2)
        self.assertEqual(hookLengthCount((3, 2)), 5)
        self.assertEqual(kostkaNumber((2, 1), (1, 1, 1)), 2)
        self.assertEqual(kostkaNumber((2, 1), (2, 1)), 1)
        self.assertEqual(kostkaNumber((1, 1), (2,)), 0)
        self.assertEqual(monomialCount((2, 1), 3), 6)

    def testPieri(self):
        """ s_(1) s_mu is the sum of the s_{mu + eps_j} """
        for mu in partitionsUpTo(4, 3):
            product = schur((1,), 3) * schur(mu, 3)
            expected = SymPoly(3)
            for j in range(1, 4):
                upper = mu.addBox(j)
                if upper is not None and upper.length <= 3:
                    expected = expected + schur(upper, 3)
            self.assertEqual(product, expected)


class JackTest(unittest.TestCase):

    def testLinear(self):
        for a in (1, 2, 4, Fraction(3, 2)):
            for n in (1, 2, 3):
                self.assertEqual(jackSpherical((1,), n, a), SymPoly(n, {(1,): Fraction(1, n)}))

    def testSecondDegree(self):
        """ Jack parameter alpha = 2/a: ((1 + alpha) m_2 + 2 m_11) / (2 alpha + 4) """
        for a in (1, 2, 4):
            alpha = Fraction(2, a)
            expected = SymPoly(2, {(2,): (1 + alpha) / (2 * alpha + 4), (1, 1): 2 / (2 * alpha + 4)})
            self.assertEqual(jackSpherical((2,), 2, a), expected)

    def testNormalization(self):
        for a in (1, 2, 4):
            for n in range(1, 5):
                for mu in partitionsUpTo(6, n):
                    self.assertEqual(jackSpherical(mu, n, a).atOnes(), 1)

    def testSchurConsistency(self):
        for n in (2, 3):
            for mu in partitionsUpTo(5, n):
                self.assertEqual(jackSpherical(mu, n, 2) * principalSpec(mu, n), schur(mu, n))
        self.assertEqual(jackSpherical((2, 1), 2, 2), SymPoly(2, {(2, 1): Fraction(1, 2)}))

    def testHomogeneity(self):
        phi = jackSpherical((2, 1), 3, 1)
        point = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 7)]
        c = Fraction(5, 3)
        self.assertEqual(evalSym(phi, [c * t for t in point]), c ** 3 * evalSym(phi, point))
        self.assertEqual(evalSym(phi, [0, 0, 0]), 0)
        self.assertEqual(set(kappa.size for kappa in phi.coeffs), {3})

    def testErrors(self):
        self.assertRaises(ParameterException, jackSpherical, (1, 1, 1), 2, 2)
        self.assertRaises(ParameterException, jackSpherical, (1,), 2, 0)
        self.assertRaises(ParameterException, evalSym, schur((1,), 2), [1, 2, 3])


class DimIsotypeTest(unittest.TestCase):

    def testExamples(self):
        self.assertEqual(dimIsotype((1,), deriveParams(1, 2, 1)), 2)
        self.assertEqual(dimIsotype((1,), deriveParams(2, 2, 0)), 4)
        self.assertEqual(dimIsotype((1, 1), deriveParams(2, 2, 0)), 1)
        self.assertEqual(dimIsotype((3,), deriveParams(1, 2, 2)), 10)
        self.assertEqual(dimIsotype((2, 1), deriveParams(2, 2, 1)), 2 * 8)

    def testNoModel(self):
        self.assertRaises(ModelNotSupportedException, dimIsotype, (1,), deriveParams(2, 1, 0))
        self.assertRaises(ParameterException, dimIsotype, Partition((1, 1, 1)), deriveParams(2, 2, 0))


if __name__ == '__main__':
    unittest.main()
