"""
    HyperToepAPI.RawCommand - wrapper if one wants to simply execute a check
        command but doesn't want to subprocess.Popen()
"""
import HyperToepAPI

from HyperToepClient.ClientUtilities import initLoggers, flushMemoryLogger, removeLoggerHandlers


def hyperToepCommand(command, *args, **kwargs):
    """ hyperToepCommand - executes a given command with certain arguments and
                           returns the raw result back from the client. Keyword
                           arguments become options: n_max=50 -> --n-max 50,
                           all=True -> --all.
    """
    arguments = []
    for key, val in kwargs.items():
        option = '--' + str(key).replace('_', '-')
        if isinstance(val, bool):
            if val:
                arguments.append(option)
        else:
            arguments.append(option)
            arguments.append(str(val))
    arguments.extend(list(args))

    return execRaw(command, arguments)


def execRaw(command, args):
    """
        execRaw - executes a given command with certain arguments and returns
                  the raw result back from the client. args is a python list,
                  the same python list parsed by the optparse module
                  Every command returns a dictionary of the form
                  {'commandStatus': status, 'report': reportDict}
                  where status can have the values 'SUCCESS' or 'FAILED'
    """
    try:
        mod = __import__('HyperToepClient.Commands.%s' % command, fromlist=command)
    except ImportError:
        raise HyperToepAPI.BadArgumentException( \
                                        'Could not find command "%s"' % command)

    tblogger, logger, memhandler = initLoggers()

    try:
        cmdobj = getattr(mod, command)(logger, args)
        res = cmdobj()
    except SystemExit as se:
        # an error (or --help) from the OptionParser in SubCommand
        if se.code == 2:
            raise HyperToepAPI.BadArgumentException('Bad arguments for command "%s": %s' % (command, args))
        raise
    finally:
        flushMemoryLogger(tblogger, memhandler, logger.logfile)
        removeLoggerHandlers(tblogger)
        removeLoggerHandlers(logger)
    return res
