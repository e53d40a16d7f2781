from HyperToepClient.Commands.SubCommand import SubCommand
from HyperToepClient.ClientUtilities import colors
from HyperToepClient.ClientExceptions import ConfigurationException
from HyperToepClient.Calculus.DomainParams import partitionsUpTo
from HyperToepClient.Calculus.RadialMeasures import (makeRadialSpec, radialType, admissibleSpecs,
                                                     checkRadialMomentIdentity, checkEmbeddedKernelMoment,
                                                     degenerationChainHolds, momentTableRow, MOMENT_TABLE_COLUMNS)

## Default relative tolerances: quadrature is exact for even a, tensor Gauss-Jacobi otherwise.
EXACT_TOL = 1e-8
INEXACT_TOL = 1e-6


class radial_check(SubCommand):
    """
    Check that the radial moments of the measures of a family are hypergeometric:
    the integral of every spherical polynomial Phi_mu with |mu| <= max-weight must
    equal (d/r)_mu times the coefficient of the type. For a = 2 and lambda = r the
    diagonal kernel moments d_mu/(nu_k)_mu are checked as well.
    """
    name = 'radial_check'
    shortnames = ['rad']

    def __init__(self, logger, cmdargs=None):
        SubCommand.__init__(self, logger, cmdargs)


    def __call__(self):
        sp = self.structure
        report = self.newReport()
        nodes = self.options.nodes or None
        tol = self.options.tol
        if tol is None:
            tol = EXACT_TOL if sp.a == int(sp.a) and int(sp.a) % 2 == 0 else INEXACT_TOL

        if self.options.all:
            specs = list(admissibleSpecs(sp, self.options.nu))
        else:
            lam = sp.r if self.options.lam is None else self.options.lam
            nu = self.options.nu
            if self.options.k == 0 and nu is None:
                nu = sp.p + 1
            specs = [makeRadialSpec(sp, self.options.k, lam, nu if self.options.k == 0 else None, self.options.family)]

        rows = []
        for spec in specs:
            htype = radialType(spec)
            self.logger.info("Checking %s up to weight %d", spec.describe(), self.options.max_weight)
            for mu in partitionsUpTo(self.options.max_weight, spec.lam):
                check = checkRadialMomentIdentity(spec, htype, mu, nodes)
                report.addResult("%s mu=%s" % (spec.describe(), mu), check.moment, check.target, check.relErr, tol=tol)
                rows.append(momentTableRow(spec, mu, check))

        kernelKs = []
        if sp.a == 2 and sp.hasModel:
            if self.options.all:
                kernelKs = range(1, sp.r + 1)
            elif self.options.k >= 1 and (self.options.lam is None or self.options.lam == sp.r):
                kernelKs = [self.options.k]
        for k in kernelKs:
            for mu in partitionsUpTo(self.options.max_weight, sp.r):
                check = checkEmbeddedKernelMoment(sp, k, mu, nodes)
                report.addResult("kernel k=%d mu=%s" % (k, mu), check.moment, check.target, check.relErr, tol=tol)

        chainK = min(max(self.options.k, 1), sp.r)
        holds = degenerationChainHolds(sp, chainK, self.options.nu)
        report.addResult('degeneration chain k=%d' % chainK, holds, True, passed=holds)
        report.extra['specs'] = [spec.describe() for spec in specs]
        return self.emitReport(report, MOMENT_TABLE_COLUMNS, rows)


    def validateOptions(self):
        SubCommand.validateOptions(self)
        if self.options.max_weight < 0:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --max-weight must be nonnegative, got %s." % self.options.max_weight
            raise ConfigurationException(msg)
        if self.options.nodes < 0:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --nodes must be nonnegative (0 selects the exact rule), got %s." % self.options.nodes
            raise ConfigurationException(msg)
        if self.options.k < 0:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --k must be nonnegative, got %s." % self.options.k
            raise ConfigurationException(msg)
