#!/usr/bin/env python
# encoding: utf-8
"""
TopLevel_t.py
"""

import contextlib
import io
import json
import logging
import os
import shutil
import tempfile
import unittest

import HyperToepAPI
from HyperToepAPI import RawCommand
from HyperToepClient.ClientExceptions import ConfigurationException


class TopLevelTest(unittest.TestCase):

    def setUp(self):
        self.workdir = tempfile.mkdtemp(prefix='hypertoep_api_t_')
        self.logfile = os.path.join(self.workdir, 'api.log')

    def tearDown(self):
        HyperToepAPI.setLogging(logging.DEBUG, logging.DEBUG, logging.DEBUG)
        shutil.rmtree(self.workdir, ignore_errors=True)

    def execute(self, command, args):
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            res = HyperToepAPI.execRaw(command, args)
        return res, json.loads(out.getvalue())

    def testSetLogging(self):
        apiLog = HyperToepAPI.setLogging(logging.WARNING)
        self.assertEqual(apiLog.name, 'HTOEP.HyperToepAPI')
        self.assertEqual(apiLog.level, logging.WARNING)
        _, clientLog, calculusLog = HyperToepAPI.getAllLoggers()
        self.assertEqual(clientLog.level, 100)
        self.assertEqual(calculusLog.name, 'HTOEP.Calculus')
        self.assertEqual(calculusLog.logfile, 'disabled_in_api')
        self.assertEqual(HyperToepAPI.getLogger('sub').name, 'HTOEP.HyperToepAPI.sub')

    def testExecRaw(self):
        res, report = self.execute('params', ['--r', '2', '--logfile', self.logfile])
        self.assertEqual(res['commandStatus'], 'SUCCESS')
        self.assertEqual(res['report']['check'], 'params')
        self.assertEqual(report['params']['r'], 2)
        self.assertTrue(os.path.exists(self.logfile))
        self.assertFalse(logging.getLogger('HTOEP.all').handlers)

    def testBadArguments(self):
        self.assertRaises(HyperToepAPI.BadArgumentException, HyperToepAPI.execRaw, 'no_such_check', [])
        with contextlib.redirect_stderr(io.StringIO()):
            self.assertRaises(HyperToepAPI.BadArgumentException, HyperToepAPI.execRaw, 'params',
                              ['--bogus', '--logfile', self.logfile])
        self.assertRaises(ConfigurationException, HyperToepAPI.execRaw, 'moments',
                          ['--size', '0', '--logfile', self.logfile])

    def testKeywordArguments(self):
        calls = []
        original = RawCommand.execRaw
        RawCommand.execRaw = lambda command, args: calls.append((command, args))
        try:
            HyperToepAPI.hyperToepCommand('radial_check', n_max=5, all=True, timing=False, logfile=self.logfile)
        finally:
            RawCommand.execRaw = original
        self.assertEqual(calls, [('radial_check', ['--n-max', '5', '--all', '--logfile', self.logfile])])


if __name__ == '__main__':
    unittest.main()
