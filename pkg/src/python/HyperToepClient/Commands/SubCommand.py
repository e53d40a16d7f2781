import os
import sys
import time
import platform

from HyperToepClient import __version__
from HyperToepClient.ClientMapping import commandsConfiguration, getCommandOptions, optionDest
from HyperToepClient.ClientUtilities import colors, toExact, changeFileLogger
from HyperToepClient.ClientExceptions import ConfigurationException, ParameterException
from HyperToepClient.HyperToepOptParser import HyperToepCmdOptParser
from HyperToepClient.RunReport import RunReport, writeCsv
from HyperToepClient.Calculus.DomainParams import deriveParams
from HyperToepClient.Calculus.FockToeplitz import modelParams, modelType


class SubCommand(object):

    ## setting visible = False doesn't allow the sub-command to be called from CLI
    visible = True
    shortnames = []

    def __init__(self, logger, cmdargs=None, disable_interspersed_args=False):
        """
        Initialize common client parameters
        """
        if not hasattr(self, 'name'):
            self.name = self.__class__.__name__

        # The command logger.
        self.logger = logger
        self.logfile = self.logger.logfile
        self.startTime = time.time()

        self.logger.debug("HyperToep client version: %s", __version__)
        self.logger.debug("Running on: %s (python %s)", platform.platform(), platform.python_version())
        self.logger.debug("Executing command: '%s'" % str(self.name))

        # Get the command configuration.
        self.cmdconf = commandsConfiguration.get(self.name)
        if not self.cmdconf:
            raise RuntimeError("Cannot find command %s in commandsConfiguration inside ClientMapping. Are you a developer "
                               "trying to add a command without its corresponding configuration?" % self.name)

        # The options parser.
        self.parser = HyperToepCmdOptParser(self.name, self.__doc__, disable_interspersed_args)

        # Define the command options.
        self.setSuperOptions()

        # Parse the command options/arguments.
        cmdargs = cmdargs or []
        self.cmdargs = cmdargs
        (self.options, self.args) = self.parser.parse_args(cmdargs)

        # The structure constants (and the model type) the command works on.
        self.structure = None
        self.htype = None

        # Validate the command options
        self.validateOptions()
        self.loadStructure()

        # Log user command and options used for debuging purpose.
        self.logger.debug('Command use: %s' % self.name)
        self.logger.debug('Options use: %s' % cmdargs)


    def __call__(self):
        """
        this needs to be implemented by each command class which subclassed SubCommand
        call signature is always __call__(self)
        the command must either raise an exception for the caller to catch or
        return a dictionary of the format
        {'commandStatus': status, 'report': reportDict}
        where status can have the values 'SUCCESS' or 'FAILED'
        """
        self.logger.info("This is a 'nothing to do' command")
        raise NotImplementedError


    def terminate(self, exitcode):
        #We do not want to print logfile for each command...
        if exitcode < 2000:
            self.logger.info("Log file is %s" % os.path.abspath(self.logfile))


    def setOptions(self):
        raise NotImplementedError


    def setSuperOptions(self):
        try:
            #add command related options
            self.setOptions()
        except NotImplementedError:
            pass

        self.parser.addMappedOptions()
        self.parser.addCommonOptions(self.cmdconf)


    def validateOptions(self):
        """
        __validateOptions__

        Validate the command line options of the command.
        Raise a ConfigurationException in case of error; don't do anything if ok.
        Rational and list options are converted to their python values here.
        """
        for name, info in getCommandOptions(self.name).items():
            dest = optionDest(name)
            value = getattr(self.options, dest, None)
            if value is None or info['type'] not in ('rational', 'intlist', 'rationallist'):
                continue
            try:
                if info['type'] == 'rational':
                    value = toExact(value)
                elif info['type'] == 'intlist':
                    value = [int(v) for v in value.split(',') if v.strip()]
                else:
                    value = [toExact(v.strip()) for v in value.split(',') if v.strip()]
            except (ValueError, ParameterException) as ex:
                msg = "%sError%s:" % (colors.RED, colors.NORMAL)
                msg += " Invalid value '%s' for option --%s: %s" % (getattr(self.options, dest), name, ex)
                raise ConfigurationException(msg)
            setattr(self.options, dest, value)

        if getattr(self.options, 'logfile', None):
            self.logfile = changeFileLogger(self.logger, self.options.logfile)

        # If the command does not take any arguments, but some arguments were passed,
        # clear the arguments list and give a warning message saying that the given
        # arguments will be ignored.
        if not self.cmdconf['acceptsArguments'] and len(self.args):
            msg = "%sWarning%s:" % (colors.RED, colors.NORMAL)
            msg += " 'hypertoep %s' command takes no arguments, %d given." % (self.name, len(self.args))
            msg += " Ignoring arguments %s." % (self.args)
            self.logger.warning(msg)
            self.args = []


    def checkPositive(self, *names):
        """ Raise a ConfigurationException unless the integer options are >= 1 """
        for name in names:
            value = getattr(self.options, optionDest(name))
            if value is None or value < 1:
                msg = "%sError%s:" % (colors.RED, colors.NORMAL)
                msg += " Option --%s must be a positive integer, got %s." % (name, value)
                raise ConfigurationException(msg)


    def loadStructure(self):
        """
        Structure constants from --r/--a/--b, or the concrete model and its
        type from --shape/--ball and the type options.
        """
        if self.cmdconf['usesStructure']:
            self.structure = deriveParams(self.options.r, self.options.a, self.options.b)
            self.logger.debug("Structure constants: %s", self.structure.describe())
        if self.cmdconf['usesModel']:
            self.structure = modelParams(self.options.shape, self.options.ball)
            self.htype = modelType(self.structure, self.options.type, self.options.k,
                                   self.options.lam, self.options.nu)
            self.logger.debug("Model %s with type %s", self.structure.describe(), self.htype.describe())


    def effectiveParams(self):
        """ Every option of the command as it was used, defaults included """
        return dict((name, getattr(self.options, optionDest(name))) for name in getCommandOptions(self.name))


    def newReport(self):
        seed = self.options.seed if self.cmdconf['usesSeed'] else None
        return RunReport(self.name, self.effectiveParams(), seed)


    def emitReport(self, report, columns=None, rows=None):
        """
        Write the report to stdout (and to --output), the table to --csv,
        and build the return dictionary of the command.
        """
        if self.options.timing:
            report.runtimeMs = int(round((time.time() - self.startTime) * 1000))
        sys.stdout.write(report.toJson())
        sys.stdout.flush()
        if self.options.output:
            report.writeJson(self.options.output)
            self.logger.debug("Report written to %s", os.path.abspath(self.options.output))
        if self.cmdconf['writesCsv'] and getattr(self.options, 'csv', None):
            writeCsv(self.options.csv, columns or [], rows or [])
            self.logger.info("Table written to %s", os.path.abspath(self.options.csv))
        if report.passed:
            self.logger.info("%sSuccess%s: all %d cases of '%s' passed." % (colors.GREEN, colors.NORMAL, len(report.results), self.name))
            return {'commandStatus': 'SUCCESS', 'report': report.toDict()}
        self.logger.warning("%sFailure%s: cases %s of '%s' failed." % (colors.RED, colors.NORMAL, ', '.join(report.failedCases()), self.name))
        return {'commandStatus': 'FAILED', 'report': report.toDict()}
