import json
import math
import os
from collections import OrderedDict
from fractions import Fraction

import numpy

from HyperToepClient.Commands.SubCommand import SubCommand
from HyperToepClient.ClientUtilities import colors
from HyperToepClient.ClientExceptions import ConfigurationException
from HyperToepClient.Calculus.DomainParams import partitionsOf, partitionsUpTo
from HyperToepClient.Calculus.SymFunc import dimIsotype
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly, randomPolynomial
from HyperToepClient.Calculus.IsotypeBasis import isotypeBasis, rankProject
from HyperToepClient.Calculus.FockToeplitz import (ToeplitzSymbol, matrixUnits, adjointClosedForm, adjointBruteForce,
                                                   toeplitzMatrix, blockSparsityHolds, adjointRelationHolds,
                                                   checkMultiplicativity, kernelExpansion, ballShiftWeights,
                                                   dumpBlockMatrix)

## Degree bound of each factor of the random multiplicativity triples.
RANDOM_FACTOR_DEGREE = 2

## Fock completeness is checked for the homogeneous degrees up to this one.
COMPLETENESS_DEGREE = 5

CHECK_COLUMNS = ['case', 'value', 'target', 'rel_err', 'pass']


class toeplitz_check(SubCommand):
    """
    Check the Toeplitz calculus of a concrete model: the closed form of the adjoint
    multiplications against brute force on every isotype up to --degree, block sparsity
    and the adjoint relation of the truncated matrices, multiplicativity on seeded
    random triples, Fock completeness, the kernel expansion, and on the ball the
    weights of the adjoint shift.
    """
    name = 'toeplitz_check'
    shortnames = ['toep']

    def __init__(self, logger, cmdargs=None):
        SubCommand.__init__(self, logger, cmdargs)


    def __call__(self):
        report = self.newReport()
        report.extra['model'] = self.structure.describe()
        report.extra['type'] = self.htype.describe()
        self.checkAdjoint(report)
        self.checkMatrices(report)
        self.checkMultiplicativity(report)
        self.checkCompleteness(report)
        self.checkKernel(report)
        if self.structure.isBall:
            self.checkShiftWeights(report)
        return self.emitReport(report, CHECK_COLUMNS, report.results)


    def checkAdjoint(self, report):
        shape, htype = self.structure.shape, self.htype
        dimensions = OrderedDict()
        for mu in partitionsUpTo(self.options.degree, min(shape)):
            if not mu or mu.length > htype.ell:
                continue
            basis = isotypeBasis(shape, mu)
            dimensions[str(mu)] = basis.dimension
            mismatches = 0
            for vector in basis.vectors:
                for _, _, unit in matrixUnits(shape):
                    if adjointClosedForm(htype, unit, mu, vector) != adjointBruteForce(htype, unit, mu, vector):
                        mismatches += 1
            self.logger.debug("Adjoint of the %d basis vectors of %s: %d mismatches", basis.dimension, mu, mismatches)
            report.addResult('adjoint mu=%s' % (mu,), mismatches, 0, passed=mismatches == 0)
        report.extra['isotype_dimensions'] = dimensions


    def checkMatrices(self, report):
        shape, htype, degree = self.structure.shape, self.htype, self.options.degree
        dumped = OrderedDict()
        for i, j, unit in matrixUnits(shape):
            linear = MatrixPoly.linearForm(shape, unit)
            raising = toeplitzMatrix(htype, ToeplitzSymbol(linear, False), degree, shape)
            lowering = toeplitzMatrix(htype, ToeplitzSymbol(linear, True), degree, shape)
            sparse = blockSparsityHolds(raising, True) and blockSparsityHolds(lowering, False)
            report.addResult('block sparsity z%d%d' % (i + 1, j + 1), sparse, True, passed=sparse)
            related = adjointRelationHolds(raising, lowering)
            report.addResult('adjoint relation z%d%d' % (i + 1, j + 1), related, True, passed=related)
            if self.options.dump:
                dumped['z%d%d' % (i + 1, j + 1)] = json.loads(dumpBlockMatrix(raising))
                dumped['conj:z%d%d' % (i + 1, j + 1)] = json.loads(dumpBlockMatrix(lowering))
        if self.options.dump:
            with open(self.options.dump, 'w') as fd:
                json.dump(dumped, fd, indent=1)
                fd.write('\n')
            self.logger.info("Operator matrices written to %s", os.path.abspath(self.options.dump))


    def checkMultiplicativity(self, report):
        shape, htype = self.structure.shape, self.htype
        rng = numpy.random.default_rng(self.options.seed)
        failures = 0
        for _ in range(self.options.random):
            p = randomPolynomial(shape, RANDOM_FACTOR_DEGREE, rng)
            q = randomPolynomial(shape, RANDOM_FACTOR_DEGREE, rng)
            phi = rankProject(randomPolynomial(shape, RANDOM_FACTOR_DEGREE, rng), htype.ell)
            if not checkMultiplicativity(htype, p, q, phi, 3 * RANDOM_FACTOR_DEGREE):
                failures += 1
        report.addResult('multiplicativity of %d triples' % self.options.random, failures, 0, passed=failures == 0)


    def checkCompleteness(self, report):
        sp = self.structure
        r, s = sp.shape
        for n in range(COMPLETENESS_DEGREE + 1):
            total = sum(dimIsotype(mu, sp) for mu in partitionsOf(n, r))
            report.addResult('fock completeness n=%d' % n, total, math.comb(r * s + n - 1, n),
                             passed=total == math.comb(r * s + n - 1, n))


    def checkKernel(self, report):
        sp = self.structure
        r, s = sp.shape
        nu = sp.p if self.options.nu is None else self.options.nu
        w = [[Fraction(1, i + j + 2) for j in range(s)] for i in range(r)]
        expansion, taylor = kernelExpansion(nu, w, self.options.degree, sp)
        report.addResult('kernel expansion nu=%s' % nu, expansion == taylor, True, passed=expansion == taylor)


    def checkShiftWeights(self, report):
        for m, weight, expected in ballShiftWeights(self.htype, self.structure.shape[1], self.options.degree):
            report.addResult('shift weight m=%d' % m, weight, expected, passed=weight == expected)


    def validateOptions(self):
        SubCommand.validateOptions(self)
        self.checkPositive('degree')
        if self.options.random < 0:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --random must be nonnegative, got %s." % self.options.random
            raise ConfigurationException(msg)
