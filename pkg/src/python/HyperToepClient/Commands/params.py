from collections import OrderedDict

from HyperToepClient.Commands.SubCommand import SubCommand
from HyperToepClient.ClientUtilities import colors
from HyperToepClient.ClientExceptions import ConfigurationException
from HyperToepClient.Calculus.DomainParams import (nuForms, nuK, wSub, wallachSet, isInWallachSet, strataPoset,
                                                   classifyStratum, makeType, limitType, faceType, reducedParams)
from HyperToepClient.Calculus.BoundaryRep import faceLimitType

PARAMS_COLUMNS = ['r', 'a', 'b', 'd', 'p', 'k', 'nu_k', 'form_1', 'form_2', 'form_3', 'form_4', 'in_wallach_set']


class params(SubCommand):
    """
    Show the structure constants derived from (r, a, b), the four forms of the
    embedded Wallach parameters nu_k, W_sub, the Wallach set, the strata of the
    closed sets (k, lambda) and the boundary limit types of the measures M_{k,lambda}.
    """
    name = 'params'
    shortnames = ['par']

    def __init__(self, logger, cmdargs=None):
        SubCommand.__init__(self, logger, cmdargs)


    def __call__(self):
        sp = self.structure
        report = self.newReport()
        report.extra['structure'] = sp.describe()

        self.logger.info("Structure constants: r=%s a=%s b=%s -> d=%s p=%s", sp.r, sp.a, sp.b, sp.d, sp.p)
        nuTable, rows = [], []
        for k in range(1, sp.r + 1):
            forms = nuForms(sp, k)
            report.addResult('nu_%d forms' % k, nuK(sp, k), forms[-1], tol=1e-12)
            inWallach = isInWallachSet(sp, nuK(sp, k))
            report.addResult('nu_%d in wallach set' % k, inWallach, True, passed=inWallach)
            nuTable.append(OrderedDict([('k', k), ('nu_k', forms[0]), ('forms', list(forms))]))
            rows.append([sp.r, sp.a, sp.b, sp.d, sp.p, k, forms[0]] + list(forms) + [inWallach])
            if k >= 2:
                ## nu_k - a/2 is nu_{k-1} of the Peirce-0 space of a minimal tripotent
                reduced = reducedParams(sp, 1)
                report.addResult('nu_%d reduced' % k, nuK(sp, k) - sp.a / 2, nuK(reduced, k - 1), tol=1e-12)
        report.extra['nu_table'] = nuTable
        report.extra['w_sub'] = wSub(sp).describe()
        report.extra['wallach_set'] = wallachSet(sp).describe()
        self.logger.info("W_sub = %s", report.extra['w_sub'])

        strata, faces = [], []
        for k, lam in self.selectedSets():
            labels, relations = strataPoset(k, lam)
            misplaced = 0
            for label in labels:
                ## i unit values, j - i values 1/2 and r - j zeros sit in the stratum (i, j)
                sv = [1] * label.i + [0.5] * (label.j - label.i) + [0] * (sp.r - label.j)
                if classifyStratum(sv, k, lam) != label:
                    misplaced += 1
            report.addResult('strata k=%d lambda=%d' % (k, lam), misplaced, 0, passed=misplaced == 0)
            strata.append(OrderedDict([('k', k), ('lambda', lam),
                                       ('labels', ["(%d,%d)" % label for label in labels]),
                                       ('closure', ["(%d,%d) < (%d,%d)" % (low + up) for low, up in relations])]))
            if k >= 1:
                faces.append(self.faceTypes(report, k, lam))
        report.extra['strata'] = strata
        report.extra['face_types'] = faces
        return self.emitReport(report, PARAMS_COLUMNS, rows)


    def selectedSets(self):
        r = self.structure.r
        ks = [self.options.k] if self.options.k is not None else range(r + 1)
        lams = [self.options.lam] if self.options.lam is not None else range(r + 1)
        return [(k, lam) for k in ks for lam in lams if 0 <= k <= lam <= r]


    def faceTypes(self, report, k, lam):
        """ Limit types of M_{k,lam} at the tripotents of rank i < r, against the iterated limitType """
        sp = self.structure
        htype = makeType(sp, k, lam)
        entry = OrderedDict([('k', k), ('lambda', lam), ('type', htype.describe()), ('faces', [])])
        if lam >= 1:
            entry['limit_type'] = limitType(htype).describe()
        for i in range(1, min(lam, sp.r - 1) + 1):
            reduced, face = faceType(sp, k, lam, i)
            iterated = faceLimitType(htype, i)
            report.addResult('face k=%d lambda=%d i=%d' % (k, lam, i), face == iterated, True, passed=face == iterated)
            entry['faces'].append(OrderedDict([('i', i), ('reduced', reduced.describe()), ('type', face.describe())]))
        return entry


    def validateOptions(self):
        SubCommand.validateOptions(self)
        for name in ('k', 'lam'):
            value = getattr(self.options, name)
            if value is not None and value < 0:
                msg = "%sError%s:" % (colors.RED, colors.NORMAL)
                msg += " Option --%s must be nonnegative, got %s." % (name, value)
                raise ConfigurationException(msg)
