import math
from collections import OrderedDict

from HyperToepClient.Commands.SubCommand import SubCommand
from HyperToepClient.ClientUtilities import colors
from HyperToepClient.ClientExceptions import ConfigurationException, ParameterException, MissingOptionException
from HyperToepClient.Calculus.DomainParams import Partition, makeType, limitType, faceType
from HyperToepClient.Calculus.FockToeplitz import conicalNormRatio
from HyperToepClient.Calculus.Asymptotics import (WrightSeriesSpec, BESSEL_LIMIT, DEFAULT_GRID, makePeakingSpec,
                                                  assemblePeakingSeries, peakingTarget, peakingMomentRatio,
                                                  richardson, doublingGrid, thetaOfType, wrightScaledLimit,
                                                  convergenceTable, isCauchy)

RATIO_COLUMNS = ['n', 'ratio', 'target', 'rel_err', 'richardson', 'richardson_rel_err']

## Number of m1 values >= lambda_1 used for the conical norm ratios.
CONICAL_STEPS = 3

## Tolerance on the successive differences of the Bessel scaled limit.
CAUCHY_TOL = 1e-4


class peaking(SubCommand):
    """
    Follow the moment ratio R(n) of the peaking functions for a partition lambda of
    length ell - 1 on a doubling grid up to --n-max, and compare it (plain and
    Richardson extrapolated) with the coefficient of lambda in the limit type.
    Also checks that theta does not depend on lambda, that the limit type is the
    type of the reduced measure, the conical norm ratios (a = 2) and the scaled
    limit of the Bessel series.
    """
    name = 'peaking'
    shortnames = ['peak']

    def __init__(self, logger, cmdargs=None):
        SubCommand.__init__(self, logger, cmdargs)


    def __call__(self):
        sp = self.structure
        lam = sp.r if self.options.lam is None else self.options.lam
        htype = makeType(sp, self.options.k, lam, self.options.nu)
        pspec = makePeakingSpec(htype, Partition(self.options.partition))
        report = self.newReport()
        report.extra['type'] = htype.describe()
        report.extra['limit_type'] = limitType(htype).describe()

        target = peakingTarget(pspec)
        self.logger.info("Limit of the moment ratio for %s: %s", pspec.lam, target)
        rows, errors = [], []
        for n in doublingGrid(self.options.n_max):
            ratio = peakingMomentRatio(pspec, n)
            extrapolated = richardson(pspec, n)
            errors.append(abs(ratio - float(target)))
            rows.append(OrderedDict([('n', n), ('ratio', ratio), ('target', target),
                                     ('rel_err', errors[-1] / abs(float(target))), ('richardson', extrapolated),
                                     ('richardson_rel_err', abs(extrapolated - float(target)) / abs(float(target)))]))
        # raw ratios are informational; the verdict rests on the extrapolation and the error trend
        report.extra['ratios'] = rows
        last = rows[-1]
        report.addResult('richardson n=%d' % last['n'], last['richardson'], target, tol=self.options.tol)
        decreasing = all(later < earlier for earlier, later in zip(errors, errors[1:]))
        report.addResult('ratio error decreasing', decreasing, True, passed=decreasing)

        theta = thetaOfType(htype)
        for label, series in (('lambda', assemblePeakingSeries(pspec)),
                              ('empty', assemblePeakingSeries(pspec._replace(lam=Partition())))):
            report.addResult('theta %s' % label, series.theta, theta, passed=series.theta == theta)

        if sp.r > 1 and self.options.k >= 1:
            _, reducedType = faceType(sp, self.options.k, lam, 1)
            report.addResult('limit type', limitType(htype) == reducedType, True, passed=limitType(htype) == reducedType)

        if sp.a == 2 and sp.hasModel:
            first = pspec.lam.part(1)
            for m1 in range(max(first, 1), max(first, 1) + CONICAL_STEPS):
                computed, closed = conicalNormRatio(pspec.lam, m1, sp.shape, sp.a)
                report.addResult('conical ratio m1=%d' % m1, computed, closed, passed=computed == closed)

        self.checkBesselLimit(report)
        return self.emitReport(report, RATIO_COLUMNS, rows)


    def checkBesselLimit(self, report):
        """ The scaled series of I_0(2 sqrt(x)) settles at the constant BESSEL_LIMIT """
        values = wrightScaledLimit(WrightSeriesSpec([], [1]), DEFAULT_GRID)
        report.extra['bessel_convergence'] = [OrderedDict([('x', x), ('scaled', value), ('delta', delta)])
                                              for x, value, delta in convergenceTable(DEFAULT_GRID, values)]
        cauchy = isCauchy(values, CAUCHY_TOL)
        report.addResult('bessel scaled limit cauchy', cauchy, True, passed=cauchy)
        report.addResult('bessel scaled limit', values[-1], BESSEL_LIMIT, tol=CAUCHY_TOL)
        self.logger.debug("Empirical Bessel constant %.12e; 1/(2 sqrt(pi)) = %.12e, 1/sqrt(pi) = %.12e",
                          values[-1], BESSEL_LIMIT, 1 / math.sqrt(math.pi))


    def validateOptions(self):
        SubCommand.validateOptions(self)
        self.checkPositive('n-max')
        if self.options.k < 0:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --k must be nonnegative, got %s." % self.options.k
            raise ConfigurationException(msg)
        if self.options.k == 0 and self.options.nu is None:
            ex = MissingOptionException("%sError%s: Option --nu is required with --k 0." % (colors.RED, colors.NORMAL))
            ex.missingOption = "nu"
            raise ex
        try:
            Partition(self.options.partition)
        except ParameterException as ex:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Invalid partition %s: %s" % (self.options.partition, ex)
            raise ConfigurationException(msg)
