"""
Logging set up, plug-in discovery and the conversion of numeric parameters
shared by the client commands and the HyperToepAPI.
"""

# pylint: disable=consider-using-f-string

from __future__ import print_function

import os
import copy
import logging
import logging.handlers
import pkgutil
import sys
from fractions import Fraction
from time import gmtime

from HyperToepClient.ClientExceptions import ParameterException


class colors:  # pylint: disable=no-init
    """ terminal colours, only when stderr is a terminal """
    colordict = {'RED': '\033[91m', 'GREEN': '\033[92m', 'NORMAL': '\033[0m'}
    if sys.stderr.isatty():
        RED, GREEN, NORMAL = colordict['RED'], colordict['GREEN'], colordict['NORMAL']
    else:
        RED, GREEN, NORMAL = '', '', ''


class StopExecution(Exception):
    """
    Raise it to stop a client command execution without an error.
    """


## The log level for the console handler. Can be overwritten with setConsoleLogLevelVar().
CONSOLE_LOGLEVEL = logging.INFO

## Log level to mute a logger/handler.
LOGLEVEL_MUTE = logging.CRITICAL + 10

## Name of the logger used by the computational modules (file only).
CALC_LOGGER_NAME = 'HTOEP.Calculus'

## Default log file name, relative to the current directory.
DEFAULT_LOGFILE = 'hypertoep.log'

## Log format
LOGFORMAT = {'logfmt': "%(levelname)s %(asctime)s.%(msecs)03d UTC: \t %(message)s", 'datefmt': "%Y-%m-%d %H:%M:%S"}
LOGFORMATTER = logging.Formatter(LOGFORMAT['logfmt'], LOGFORMAT['datefmt'])
LOGFORMATTER.converter = gmtime

class logfilter(logging.Filter):
    def filter(self, record):
        def removecolor(text):
            if not text:
                return text
            for dummyColor, colorval in colors.colordict.items():
                if colorval in text:
                    text = text.replace(colorval, '')
            return text
        if isinstance(record.msg, Exception):
            record.msg = removecolor(str(record.msg))
        elif isinstance(record.msg, str):
            record.msg = removecolor(record.msg)
        return True


def initLoggers(logfile=None):
    """
    Logging is using the hierarchy system: the HTOEP.all logger is a child of the
    HTOEP logger. So everything that is logged to HTOEP.all will also go to HTOEP,
    but not viceversa. The HTOEP logger uses a memory handler, which then will be
    flushed to a file handler in the 'finally' stage. So:
    HTOEP.all      -> stderr + file (stdout only carries the JSON report)
    HTOEP          -> file
    HTOEP.Calculus -> file
    """
    ## Memory handler with a flush level nobody reaches, so that the records wait
    ## for flushMemoryLogger(). Colour codes are stripped before they hit the file.
    tblogger = logging.getLogger('HTOEP')
    tblogger.setLevel(logging.DEBUG)
    memhandler = logging.handlers.MemoryHandler(capacity=1024*10, flushLevel=LOGLEVEL_MUTE)
    memhandler.setFormatter(LOGFORMATTER)
    memhandler.setLevel(logging.DEBUG)
    memhandler.addFilter(logfilter())
    tblogger.addHandler(memhandler)

    ## Logger to the console. This is the logger that all the command code should
    ## use. Since it is a child of the HTOEP logger, all log records created by this
    ## logger will propagate up to the HTOEP logger handlers.
    logger = logging.getLogger('HTOEP.all')
    logger.setLevel(logging.DEBUG)
    if not logger.handlers:
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(logging.Formatter('%(message)s'))
        console.setLevel(CONSOLE_LOGLEVEL)
        logger.addHandler(console)
    logger.logfile = logfile or os.path.join(os.getcwd(), DEFAULT_LOGFILE)

    return tblogger, logger, memhandler


def setConsoleLogLevelVar(lvl):
    global CONSOLE_LOGLEVEL  # pylint: disable=global-statement
    CONSOLE_LOGLEVEL = lvl


def changeFileLogger(logger, logfile):
    """
    change file logger destination
    """
    logger.logfile = os.path.abspath(logfile)
    return logger.logfile


def flushMemoryLogger(logger, memhandler, logfilename):
    """
    Flush the memory handler into logfilename. A logfilename of None drops
    the buffered records (used by the API when file logging is disabled).
    """
    if logfilename:
        filehandler = logging.FileHandler(logfilename)
        filehandler.setFormatter(LOGFORMATTER)
        filehandler.setLevel(logging.DEBUG)
        filehandler.addFilter(logfilter())
        logger.addHandler(filehandler)
        memhandler.setTarget(filehandler)
    else:
        memhandler.buffer = []
    memhandler.close()
    logger.removeHandler(memhandler)


def removeLoggerHandlers(logger):
    for h in copy.copy(logger.handlers):
        logger.removeHandler(h)
        h.close()


def toExact(value):
    """
    _toExact_

    Convert an integer, Fraction or binary-exact float into a Fraction.
    Anything else (floats that are not exactly representable as short
    fractions, complex numbers, exact field elements) is returned unchanged,
    so callers work in floating or foreign-exact mode transparently.
    """
    if isinstance(value, bool):
        raise ParameterException("Boolean %r is not a valid numeric parameter" % value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        exact = Fraction(value)
        if exact.denominator <= 2**20:
            return exact
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            raise ParameterException("Cannot read '%s' as a rational number" % value)
    return value


def isExact(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def getPlugins(namespace, plugins, skip):
    """
    _getPlugins_

    returns a dictionary with key='class name' and value='hook to the module'
    as input needs the package name that contains the different modules
    """
    packagemod = __import__('%s.%s' % (namespace, plugins), globals(), locals(), plugins)
    fullpath = packagemod.__path__[0]
    modules = {}
    ## iterating on the modules contained in that package
    for el in list(pkgutil.iter_modules([fullpath])):
        if el[1] not in skip:
            mod = __import__('%s.%s.%s' % (namespace, plugins, el[1]), globals(), locals(), el[1])
            ## N.B. this needs the module name = plug-in/class name
            modules[el[1]] = getattr(mod, el[1], None)
            if not hasattr(modules[el[1]], 'name') and modules[el[1]]:
                setattr(modules[el[1]], 'name', modules[el[1]].__name__)

    return modules


def getAvailCommands(subcmdpath='HyperToepClient', subcmdname='Commands'):
    """
    _getAvailCommands_

    wrap the dynamic plug-in import for the available commands
    """
    subcmdplugins = getPlugins(subcmdpath, subcmdname, ['SubCommand'])
    result = {}
    for k in subcmdplugins.keys():
        if subcmdplugins[k] and subcmdplugins[k].visible:
            result[k] = subcmdplugins[k]
    return result
