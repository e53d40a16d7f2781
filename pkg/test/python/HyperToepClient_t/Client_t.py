#!/usr/bin/env python
# encoding: utf-8
"""
Client_t.py
"""

import logging
import os
import shutil
import tempfile
import unittest
from fractions import Fraction

from HyperToepClient import SpellChecker
from HyperToepClient.ClientExceptions import ParameterException, ClientException, NumericalException
from HyperToepClient.ClientMapping import (commandsConfiguration, parametersMapping, getCommandOptions,
                                           getParamDefaultValue, optionDest)
from HyperToepClient.ClientUtilities import (getAvailCommands, initLoggers, flushMemoryLogger, removeLoggerHandlers,
                                             changeFileLogger, toExact, isExact)
from HyperToepClient.HyperToepOptParser import HyperToepOptParser, HyperToepCmdOptParser


class MappingTest(unittest.TestCase):

    def testEveryCommandIsMapped(self):
        commands = getAvailCommands()
        self.assertEqual(sorted(commands), sorted(commandsConfiguration))
        self.assertEqual(commands['peaking'].shortnames, ['peak'])

    def testStructureAndModelAreExclusive(self):
        for name, conf in commandsConfiguration.items():
            self.assertFalse(conf['usesStructure'] and conf['usesModel'], name)

    def testEveryCommandWritesCsv(self):
        self.assertTrue(all(conf['writesCsv'] for conf in commandsConfiguration.values()))
        self.assertEqual([name for name, conf in commandsConfiguration.items() if conf['writesDump']], ['toeplitz_check'])

    def testCommandOptions(self):
        options = getCommandOptions('toeplitz_check')
        for name in ('shape', 'ball', 'type', 'nu', 'k', 'lam', 'degree', 'random'):
            self.assertIn(name, options)
        self.assertNotIn('r', options)
        self.assertIn('r', getCommandOptions('peaking'))
        self.assertIn('nu', getCommandOptions('peaking'))
        self.assertEqual(getCommandOptions('unknown'), {})

    def testDefaults(self):
        self.assertEqual(getParamDefaultValue('boundary_rep', 'symbols'), 'z22,conj:z22')
        self.assertEqual(getParamDefaultValue('radial_check', 'a'), '2')
        self.assertEqual(getParamDefaultValue('moments', 'missing'), None)
        self.assertEqual(optionDest('n-max'), 'n_max')

    def testMappingIsNotShared(self):
        options = getCommandOptions('radial_check')
        options['r']['default'] = 99
        self.assertEqual(parametersMapping['structure-params']['r']['default'], 2)


class OptParserTest(unittest.TestCase):

    def testTopLevel(self):
        parser = HyperToepOptParser(getAvailCommands())
        self.assertIn('boundary_rep (bdry)', parser.epilog)
        options, args = parser.parse_args(['--debug', 'params', '--r', '3'])
        self.assertTrue(options.debug)
        self.assertEqual(args, ['params', '--r', '3'])

    def testCommandParser(self):
        parser = HyperToepCmdOptParser('moments', 'doc', False)
        parser.addMappedOptions()
        parser.addCommonOptions(commandsConfiguration['moments'])
        options, _ = parser.parse_args(['--d', '3', '--nu-grid', '3,4', '--csv', 'out.csv'])
        self.assertEqual(options.d, 3)
        self.assertEqual(options.nu_grid, '3,4')
        self.assertEqual(options.csv, 'out.csv')
        self.assertEqual(options.size, 12)
        self.assertFalse(hasattr(options, 'seed'))
        self.assertFalse(hasattr(options, 'dump'))

    def testBoolAndChoice(self):
        parser = HyperToepCmdOptParser('radial_check', 'doc', False)
        parser.addMappedOptions()
        options, _ = parser.parse_args(['--all', '--family', 'lebesgue'])
        self.assertTrue(options.all)
        self.assertEqual(options.family, 'lebesgue')
        self.assertRaises(SystemExit, parser.parse_args, ['--family', 'gaussian'])


class SpellCheckerTest(unittest.TestCase):

    def setUp(self):
        SpellChecker.setDictionary(getAvailCommands())

    def testCorrect(self):
        self.assertEqual(SpellChecker.correct('param'), 'params')
        self.assertEqual(SpellChecker.correct('moments'), 'moments')
        self.assertEqual(SpellChecker.correct('peeking'), 'peaking')
        self.assertEqual(SpellChecker.correct('xyzzyxyzzy'), 'xyzzyxyzzy')
        self.assertTrue(SpellChecker.is_correct('toeplitz_check'))
        self.assertFalse(SpellChecker.is_correct('toeplitz'))


class UtilitiesTest(unittest.TestCase):

    def testToExact(self):
        self.assertEqual(toExact(3), Fraction(3))
        self.assertEqual(toExact('3/2'), Fraction(3, 2))
        self.assertEqual(toExact(0.25), Fraction(1, 4))
        self.assertTrue(isinstance(toExact(0.1), float))
        self.assertRaises(ParameterException, toExact, True)
        self.assertRaises(ParameterException, toExact, 'half')
        self.assertTrue(isExact(Fraction(1, 3)))
        self.assertFalse(isExact(0.5))

    def testExitCodes(self):
        self.assertEqual(ClientException.exitcode, 2)
        self.assertEqual(ParameterException.exitcode, 2)
        self.assertEqual(NumericalException.exitcode, 1)

    def testLoggers(self):
        workdir = tempfile.mkdtemp(prefix='hypertoep_t_')
        try:
            tblogger, logger, memhandler = initLoggers(os.path.join(workdir, 'first.log'))
            logfile = changeFileLogger(logger, os.path.join(workdir, 'client.log'))
            logging.getLogger('HTOEP.Calculus').debug("calculus record")
            logger.debug("client record")
            flushMemoryLogger(tblogger, memhandler, logfile)
            removeLoggerHandlers(tblogger)
            removeLoggerHandlers(logger)
            with open(logfile) as fd:
                content = fd.read()
            self.assertIn("calculus record", content)
            self.assertIn("client record", content)
            self.assertFalse(os.path.exists(os.path.join(workdir, 'first.log')))
        finally:
            shutil.rmtree(workdir, ignore_errors=True)


if __name__ == "__main__":
    unittest.main()
