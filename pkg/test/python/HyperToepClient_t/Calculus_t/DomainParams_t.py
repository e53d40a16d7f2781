#!/usr/bin/env python
# encoding: utf-8
"""
DomainParams_t.py
"""

import random
import unittest
from fractions import Fraction

from HyperToepClient.ClientExceptions import ParameterException
from HyperToepClient.Calculus.DomainParams import (Partition, partitionsOf, partitionsUpTo, pochhammer, deriveParams,
                                                   reducedParams, nuK, nuForms, makeType, limitType, faceType,
                                                   HypergeomType, classifyStratum, strataPoset, StratumLabel,
                                                   OUTSIDE, wSub, wallachSet, isInWallachSet)


class PartitionTest(unittest.TestCase):

    def testTrailingZeros(self):
        self.assertEqual(Partition((2, 1, 0)), Partition((2, 1)))
        self.assertEqual(Partition((2, 1)).length, 2)
        self.assertEqual(Partition((3, 1, 1)).size, 5)

    def testInvalid(self):
        self.assertRaises(ParameterException, Partition, (1, 2))
        self.assertRaises(ParameterException, Partition, (2, -1))

    def testBoxes(self):
        mu = Partition((2, 1))
        self.assertEqual(mu.addBox(1), Partition((3, 1)))
        self.assertEqual(mu.addBox(3), Partition((2, 1, 1)))
        self.assertEqual(Partition((1, 1)).addBox(2), None)
        self.assertEqual(mu.removeBox(1), Partition((1, 1)))
        self.assertEqual(Partition((1, 1)).removeBox(1), None)
        self.assertEqual(mu.shifted(2, 3), Partition((4, 3, 2)))

    def testConjugateAndDominance(self):
        self.assertEqual(Partition((3, 1)).conjugate(), Partition((2, 1, 1)))
        self.assertTrue(Partition((3,)).dominates(Partition((2, 1))))
        self.assertFalse(Partition((2, 2)).dominates(Partition((3, 1))))

    def testPartitionsOf(self):
        self.assertEqual(list(partitionsOf(0)), [Partition()])
        self.assertEqual(list(partitionsOf(4, 2)), [Partition((4,)), Partition((3, 1)), Partition((2, 2))])
        self.assertEqual(len(list(partitionsOf(6))), 11)
        self.assertEqual(len(partitionsUpTo(3)), 1 + 1 + 2 + 3)


class PochhammerTest(unittest.TestCase):

    def testExamples(self):
        self.assertEqual(pochhammer(Fraction(7, 3), (1,), 2), Fraction(7, 3))
        self.assertEqual(pochhammer(3, (2, 1), 2), 24)
        self.assertEqual(pochhammer(2, (2, 2), 2), 12)

    def testShiftIdentity(self):
        """ (nu)_{mu + n} = (nu + n)_mu (nu)_{(n, ..., n)} for random exact data """
        rng = random.Random(17)
        for _ in range(500):
            a = rng.choice([1, 2, 4])
            r = rng.randint(1, 3)
            nu = Fraction(rng.randint(1, 40), rng.randint(1, 6))
            mu = rng.choice([m for m in partitionsUpTo(6, r)])
            n = rng.randint(0, 3)
            lhs = pochhammer(nu, mu.shifted(n, r), a)
            rhs = pochhammer(nu + n, mu, a) * pochhammer(nu, (n,) * r, a)
            self.assertEqual(lhs, rhs)


class StructureParamsTest(unittest.TestCase):

    def testDerive(self):
        sp = deriveParams(2, 2, 0)
        self.assertEqual((sp.d, sp.p), (4, 4))
        self.assertEqual(sp.shape, (2, 2))
        sp = deriveParams(1, 2, 3)
        self.assertEqual((sp.d, sp.p), (4, 5))
        self.assertTrue(sp.isBall)
        sp = deriveParams(3, 2, 0)
        self.assertEqual((sp.d, sp.p), (9, 6))
        self.assertFalse(deriveParams(2, 1, 0).hasModel)

    def testDeriveErrors(self):
        self.assertRaises(ParameterException, deriveParams, 0, 2, 0)
        self.assertRaises(ParameterException, deriveParams, 2, 0, 0)
        self.assertRaises(ParameterException, deriveParams, 2, 2, -1)

    def testNuK(self):
        sp = deriveParams(2, 2, 0)
        self.assertEqual(nuK(sp, 1), 3)
        self.assertEqual(nuK(sp, 2), 2)
        self.assertEqual(nuK(deriveParams(1, 2, 3), 1), 4)
        self.assertRaises(ParameterException, nuK, sp, 3)
        for r, a, b in [(1, 2, 0), (2, 1, 0), (3, Fraction(3, 2), 1), (4, 8, 2)]:
            sp = deriveParams(r, a, b)
            self.assertEqual(nuK(sp, 1), sp.p - 1)
            for k in range(r + 1):
                self.assertEqual(len(set(nuForms(sp, k))), 1)

    def testWSub(self):
        sub = wSub(deriveParams(2, 2, 0))
        self.assertEqual(set(sub.points), set([3, 2]))
        self.assertEqual(sub.rayStart, 3)
        self.assertTrue(sub.contains(2))
        self.assertTrue(sub.contains(Fraction(7, 2)))
        self.assertFalse(sub.contains(Fraction(5, 2)))
        self.assertTrue(isInWallachSet(deriveParams(2, 2, 0), 0))
        self.assertFalse(isInWallachSet(deriveParams(2, 2, 0), Fraction(1, 2)))
        self.assertEqual(wallachSet(deriveParams(3, 2, 0)).points, (0, 1, 2))


class HypergeomTypeTest(unittest.TestCase):

    def testMakeType(self):
        sp = deriveParams(2, 2, 0)
        htype = makeType(sp, 1, 2)
        for mu in partitionsUpTo(6, 2):
            self.assertEqual(htype.coefficient(mu) * pochhammer(3, mu, 2), 1)
        self.assertEqual(htype.coefficient(()), 1)
        hardy = makeType(sp, 2, 2)
        self.assertEqual(hardy.coefficient((2, 1)), 1 / pochhammer(2, (2, 1), 2))

    def testFullRankCancellation(self):
        for r, a, b in [(1, 2, 0), (2, 2, 1), (3, 2, 0), (2, 1, 0)]:
            sp = deriveParams(r, a, b)
            for k in range(1, r + 1):
                htype = makeType(sp, k, r)
                for mu in partitionsUpTo(8, r):
                    self.assertEqual(htype.coefficient(mu) * pochhammer(nuK(sp, k), mu, a), 1)

    def testMakeTypeErrors(self):
        sp = deriveParams(2, 2, 0)
        self.assertRaises(ParameterException, makeType, sp, 2, 1)
        self.assertRaises(ParameterException, makeType, sp, 0, 2)
        self.assertRaises(ParameterException, makeType, sp, 0, 2, 3)
        self.assertRaises(ParameterException, makeType(sp, 1, 1).coefficient, (1, 1))

    def testEquality(self):
        self.assertEqual(HypergeomType([2], [2, 3], 2, 2), HypergeomType([], [3], 2, 2))
        self.assertNotEqual(HypergeomType([], [3], 2, 2), HypergeomType([], [3], 2, 1))
        self.assertRaises(ParameterException, HypergeomType, [1], [2], 2, 1)

    def testLimitType(self):
        """ limitType of M_{k,lam} is M_{k-1,lam-1} on the reduced triple """
        for r in range(2, 5):
            for a in (1, 2, 4):
                sp = deriveParams(r, a, 0)
                reduced = reducedParams(sp, 1)
                for lam in range(1, r + 1):
                    for k in range(1, lam + 1):
                        limit = limitType(makeType(sp, k, lam))
                        if k == 1:
                            expected = makeType(reduced, 0, lam - 1, nuK(sp, 1) - Fraction(a, 2))
                        else:
                            expected = makeType(reduced, k - 1, lam - 1)
                            self.assertEqual(nuK(sp, k) - Fraction(a, 2), nuK(reduced, k - 1))
                        self.assertEqual(limit, expected)

    def testBergmanLimit(self):
        bergman = HypergeomType([], [5], 2, 2)
        self.assertEqual(limitType(bergman), HypergeomType([], [4], 2, 1))
        self.assertRaises(ParameterException, limitType, HypergeomType([], [5], 2, 0))

    def testFaceType(self):
        sp = deriveParams(3, 2, 0)
        for lam in range(1, 4):
            for k in range(1, lam + 1):
                htype = makeType(sp, k, lam)
                for i in range(1, min(lam, 2) + 1):
                    iterated = htype
                    for _ in range(i):
                        iterated = limitType(iterated)
                    reduced, face = faceType(sp, k, lam, i)
                    self.assertEqual(reduced.r, 3 - i)
                    self.assertEqual(face, iterated)


class StratumTest(unittest.TestCase):

    def testExamples(self):
        self.assertEqual(classifyStratum([1, 0.5], 1, 2), StratumLabel(1, 2))
        self.assertEqual(classifyStratum([1, 1], 1, 2), StratumLabel(2, 2))
        self.assertEqual(classifyStratum([1, 0], 1, 2), StratumLabel(1, 1))
        self.assertEqual(classifyStratum([0.5, 0], 1, 2), OUTSIDE)
        self.assertRaises(ParameterException, classifyStratum, [0.5, 1], 1, 2)

    def testDisjointCover(self):
        rng = random.Random(3)
        values = [0, 0.25, 0.5, 1 - 1e-12, 1]
        for _ in range(10000):
            r = rng.randint(1, 3)
            lam = rng.randint(0, r)
            k = rng.randint(0, lam)
            sv = sorted((rng.choice(values) for _ in range(r)), reverse=True)
            units = sum(1 for t in sv if t > 0.9)
            rank = sum(1 for t in sv if t > 0)
            label = classifyStratum(sv, k, lam)
            labels, _ = strataPoset(k, lam)
            if k <= units <= rank <= lam:
                self.assertEqual(label, StratumLabel(units, rank))
                self.assertEqual(labels.count(label), 1)
            else:
                self.assertEqual(label, OUTSIDE)

    def testPoset(self):
        labels, relations = strataPoset(1, 2)
        self.assertEqual(labels, [StratumLabel(1, 1), StratumLabel(1, 2), StratumLabel(2, 2)])
        self.assertIn((StratumLabel(1, 1), StratumLabel(1, 2)), relations)
        self.assertIn((StratumLabel(2, 2), StratumLabel(1, 2)), relations)
        self.assertNotIn((StratumLabel(1, 1), StratumLabel(2, 2)), relations)


if __name__ == '__main__':
    unittest.main()
