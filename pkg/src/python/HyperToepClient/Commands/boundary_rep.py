from collections import OrderedDict

from HyperToepClient.Commands.SubCommand import SubCommand
from HyperToepClient.ClientUtilities import colors
from HyperToepClient.ClientMapping import getParamDefaultValue
from HyperToepClient.ClientExceptions import ConfigurationException, InconclusiveException
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly
from HyperToepClient.Calculus.FockToeplitz import parseSymbol
from HyperToepClient.Calculus.BoundaryRep import (faceLimitType, boundaryResidual, eventuallyDecreasing,
                                                  boundaryValue)

RESIDUAL_COLUMNS = ['symbol', 'n', 'degree', 'residual', 'tail_bound']

## Symbols used on the ball instead of the matrix default z22,conj:z22.
BALL_SYMBOLS = 'z11,conj:z11'


class boundary_rep(SubCommand):
    """
    Follow the residual ||T(f)(h_n q) - h_n T^c(f^c) q|| / ||h_n q|| of the boundary
    limit at the tripotent e_11 + ... + e_ii for n = 1..n-max, where h_n are the
    truncated peaking functions and q is a test function on the Peirce-0 block.
    A symbol passes when its residuals decrease from the middle of the range on
    and every truncation tail bound stays below --tol.
    """
    name = 'boundary_rep'
    shortnames = ['bdry']

    def __init__(self, logger, cmdargs=None):
        SubCommand.__init__(self, logger, cmdargs)


    def __call__(self):
        shape, htype, i = self.structure.shape, self.htype, self.options.tripotent
        report = self.newReport()
        report.extra['model'] = self.structure.describe()
        report.extra['type'] = htype.describe()
        report.extra['limit_type'] = faceLimitType(htype, i).describe()
        q = self.testFunction((shape[0] - i, shape[1] - i))
        report.extra['q'] = q.describe()
        degree = self.options.degree or None

        rows, values = [], OrderedDict()
        for text in self.symbols():
            symbol = parseSymbol(text, shape)
            residuals, tails = [], []
            for n in range(1, self.options.n_max + 1):
                try:
                    result = boundaryResidual(htype, symbol, q, n, degree, self.options.tol, i)
                except InconclusiveException as ex:
                    self.logger.warning("%sWarning%s: %s" % (colors.RED, colors.NORMAL, ex))
                    report.addResult('tail bound %s n=%d' % (text, n), ex.tailBound, self.options.tol, passed=False)
                    break
                residuals.append(result.residual)
                tails.append(result.tailBound)
                rows.append(OrderedDict([('symbol', text), ('n', n), ('degree', result.degree),
                                         ('residual', result.residual), ('tail_bound', result.tailBound)]))
            if not residuals:
                continue
            start = eventuallyDecreasing(residuals)
            self.logger.info("Residuals of %s: %.6e at n=1, %.6e at n=%d, non-increasing from n=%d",
                             text, residuals[0], residuals[-1], len(residuals), start + 1)
            report.addResult('residual %s' % text, residuals[-1], 0.0, passed=start <= len(residuals) // 2)
            report.addResult('max tail bound %s' % text, max(tails), self.options.tol, passed=max(tails) < self.options.tol)
            values[text] = boundaryValue(symbol, i)
        report.extra['boundary_values'] = values
        return self.emitReport(report, RESIDUAL_COLUMNS, rows)


    def symbols(self):
        return [text.strip() for text in self.options.symbols.split(',') if text.strip()]


    def testFunction(self, reducedShape):
        if self.options.q == 'zeta':
            if reducedShape[0] >= 1:
                return MatrixPoly.coordinate(reducedShape, 0, 0)
            self.logger.info("The Peirce-0 block %s has no coordinates, using q = 1", reducedShape)
        return MatrixPoly.constant(reducedShape, 1)


    def validateOptions(self):
        SubCommand.validateOptions(self)
        self.checkPositive('tripotent', 'n-max')
        if self.options.degree < 0:
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --degree must be nonnegative (0 selects it from the tail bound), got %s." % self.options.degree
            raise ConfigurationException(msg)
        if self.options.ball is not None and self.options.symbols == getParamDefaultValue(self.name, 'symbols'):
            self.options.symbols = BALL_SYMBOLS
        if not self.symbols():
            msg = "%sError%s:" % (colors.RED, colors.NORMAL)
            msg += " Option --symbols needs at least one symbol."
            raise ConfigurationException(msg)
