from HyperToepClient.Commands.SubCommand import SubCommand
from HyperToepClient.ClientUtilities import colors
from HyperToepClient.ClientExceptions import ConfigurationException
from HyperToepClient.Calculus.MomentFeasibility import (wSubScan, wSubType, radialMoments, betaCrossCheck,
                                                        SCAN_COLUMNS)

## Relative agreement required between the exact moments and the Beta moments.
BETA_TOL = 1e-9


class moments(SubCommand):
    """
    Decide for every nu of --nu-grid whether {y = nu} is the type of a rotation
    invariant measure on the closed ball of C^d (Hausdorff moment test on Hankel
    matrices of size --size), and compare with the membership of nu in W_sub.
    For nu > d the moments are also checked against the Beta(d, nu - d) profile.
    """
    name = 'moments'
    shortnames = ['mom']

    def __init__(self, logger, cmdargs=None):
        SubCommand.__init__(self, logger, cmdargs)


    def __call__(self):
        d, size = self.options.d, self.options.size
        report = self.newReport()
        rows = wSubScan(d, self.options.nu_grid, size, self.options.tol)
        for row in rows:
            case = 'd=%d nu=%s' % (row['d'], row['nu'])
            if row['feasible'] != row['expected']:
                self.logger.warning("%sWarning%s: feasibility of %s is %s, W_sub membership is %s"
                                    % (colors.RED, colors.NORMAL, case, row['feasible'], row['expected']))
            report.addResult('feasible %s' % case, row['feasible'], row['expected'], passed=row['feasible'] == row['expected'])
            if row['nu'] > d:
                seq = radialMoments(d, wSubType(row['nu']), 2 * size)
                deviation = betaCrossCheck(seq, row['nu'])
                report.addResult('beta %s' % case, deviation, None, relErr=deviation, tol=BETA_TOL)
        report.extra['scan'] = rows
        return self.emitReport(report, SCAN_COLUMNS, rows)


    def validateOptions(self):
        SubCommand.validateOptions(self)
        self.checkPositive('d', 'size')
        if not self.options.nu_grid:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --nu-grid needs at least one value."
            raise ConfigurationException(msg)
