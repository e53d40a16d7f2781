"""
Machine readable result of a check command.

The JSON text is produced with a fixed key order and a fixed number format
(floats as %.12e, exact rationals as "p/q" strings), so two identical runs
give byte identical reports. runtime_ms stays null unless the command was
run with --timing.
"""

from __future__ import division

import csv
import json
import math
import numbers
from collections import OrderedDict
from fractions import Fraction

SCHEMA_VERSION = 1

FLOAT_FORMAT = '%.12e'


def formatNumber(value):
    """
    Value of a report field as a plain python object (str/int/bool/None),
    following the report number conventions.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, complex):
        return ('%.12e%+.12ei') % (value.real, value.imag)
    if isinstance(value, numbers.Real):
        value = float(value)
        if math.isnan(value) or math.isinf(value):
            return None
        return _FormattedFloat(value)
    return str(value)


class _FormattedFloat(float):
    """ float that serializes with FLOAT_FORMAT """
    def __repr__(self):
        return FLOAT_FORMAT % self


def _encode(obj, indent, level):
    pad = ' ' * (indent * (level + 1))
    end = ' ' * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return '{}'
        items = ['%s%s: %s' % (pad, json.dumps(str(key)), _encode(val, indent, level + 1)) for key, val in obj.items()]
        return '{\n%s\n%s}' % (',\n'.join(items), end)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return '[]'
        items = ['%s%s' % (pad, _encode(val, indent, level + 1)) for val in obj]
        return '[\n%s\n%s]' % (',\n'.join(items), end)
    value = formatNumber(obj)
    if isinstance(value, _FormattedFloat):
        return repr(value)
    return json.dumps(value)


def relativeError(value, target):
    """ |value - target| / |target|, or |value| when the target is zero """
    if value is None or target is None:
        return None
    diff = abs(value - target)
    return diff / abs(target) if target != 0 else diff


class RunReport(object):
    """
    _RunReport_

    Collects the cases of one check run. pass is the conjunction of the case
    results; an empty report passes.
    """

    def __init__(self, check, params, seed=None):
        self.check = check
        self.params = dict(params)
        self.seed = seed
        self.results = []
        self.extra = OrderedDict()
        self.runtimeMs = None

    def addResult(self, case, value, target=None, relErr=None, passed=None, tol=None):
        if relErr is None and target is not None and value is not None:
            relErr = relativeError(value, target)
        if passed is None:
            if relErr is None or tol is None:
                raise ValueError("Case %s needs either passed or a tolerance" % case)
            passed = relErr <= tol
        self.results.append(OrderedDict([('case', case), ('value', value), ('target', target),
                                         ('rel_err', relErr), ('pass', bool(passed))]))
        return bool(passed)

    @property
    def passed(self):
        return all(result['pass'] for result in self.results)

    def failedCases(self):
        return [result['case'] for result in self.results if not result['pass']]

    def toDict(self):
        return OrderedDict([('schema_version', SCHEMA_VERSION),
                            ('check', self.check),
                            ('params', OrderedDict(sorted(self.params.items()))),
                            ('seed', self.seed),
                            ('results', self.results),
                            ('pass', self.passed),
                            ('runtime_ms', self.runtimeMs),
                            ('extra', self.extra)])

    def toJson(self, indent=1):
        return _encode(self.toDict(), indent, 0) + '\n'

    def writeJson(self, path):
        with open(path, 'w') as fd:
            fd.write(self.toJson())


def writeCsv(path, columns, rows):
    """
    Write rows (dicts or sequences) under the given header, numbers formatted
    like in the JSON report.
    """
    with open(path, 'w', newline='') as fd:
        writer = csv.writer(fd)
        writer.writerow(columns)
        for row in rows:
            if isinstance(row, dict):
                row = [row.get(col) for col in columns]
            writer.writerow(['' if val is None else (repr(val) if isinstance(val, _FormattedFloat) else val)
                             for val in (formatNumber(v) for v in row)])
