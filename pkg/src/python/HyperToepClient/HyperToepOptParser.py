from optparse import OptionParser

from HyperToepClient import __version__ as client_version
from HyperToepClient.ClientMapping import getCommandOptions, optionDest

## optparse types used for the ClientMapping option types. Rationals and lists
## are parsed by SubCommand.validateOptions.
OPTPARSE_TYPES = {'int': 'int', 'float': 'float', 'string': 'string', 'rational': 'string',
                  'intlist': 'string', 'rationallist': 'string', 'choice': 'choice'}


class HyperToepOptParser(OptionParser):
    """
    Allows to make OptionParser behave how we prefer
    """

    def __init__(self, subCommands=None):
        """ Initialize the option parser used in the the client. That's only the first step parsing
            which basically creates the help and looks for the --debug/--quiet/--list options. Each command
            than has its own set of arguments (some are shared, see HyperToepCmdOptParser ).

            subCommands: if present used to prepare a nice help summary for all the commands
        """
        usage  = "usage: %prog [options] COMMAND [command-options]"
        epilog = ""
        if subCommands:
            epilog = '\nValid commands are: \n'
            for k in sorted(subCommands.keys()):
                epilog += '  %s' % subCommands[k].name
                epilog += ''.join( [' (%s)' % name for name in subCommands[k].shortnames ] )
                epilog += '\n'
            epilog += "To get single command help run:\n  hypertoep.py command --help|-h\n"

        OptionParser.__init__(self, usage   = usage, epilog  = epilog,
                                version = "HyperToep client %s" % client_version
                             )

        # This is the important bit
        self.disable_interspersed_args()

        self.add_option( "--quiet",
                                action = "store_true",
                                dest = "quiet",
                                default = False,
                                help = "don't print any messages to stdout" )

        self.add_option( "--debug",
                                action = "store_true",
                                dest = "debug",
                                default = False,
                                help = "print extra messages to stdout" )

        self.add_option( "--list",
                                action = "store_true",
                                dest = "list",
                                default = False,
                                help = "list every check with its description and exit" )


    def format_epilog(self, formatter):
        """
        do not strip the new lines from the epilog
        """
        return self.epilog



class HyperToepCmdOptParser(OptionParser):
    """ A class that extract the pieces for parsing the command line arguments
        of the HyperToep commands.

    """

    def __init__(self, cmdname, doc, disable_interspersed_args):
        """
            doc:        the description of the command. Taken from self.__doc__
            disable_interspersed_args: stop parsing at the first positional argument
        """
        usage = "usage: %prog " + cmdname + " [options]"
        OptionParser.__init__(self, description = doc, usage = usage, add_help_option = True)
        if disable_interspersed_args:
            self.disable_interspersed_args()
        self.cmdname = cmdname


    def addMappedOptions(self):
        """
        Register every option the ClientMapping declares for this command.
        """
        for name, info in sorted(getCommandOptions(self.cmdname).items()):
            if info['type'] == 'bool':
                self.add_option("--%s" % name,
                                dest = optionDest(name),
                                action = "store_true",
                                default = info['default'],
                                help = info['help'])
                continue
            kwargs = {'dest': optionDest(name), 'type': OPTPARSE_TYPES[info['type']],
                      'default': info['default'], 'help': info['help'] + " [default: %default]"}
            if info['type'] == 'choice':
                kwargs['choices'] = info['choices']
            self.add_option("--%s" % name, **kwargs)


    def addCommonOptions(self, cmdconf):
        """
            cmdconf:    the command configuration from the ClientMapping
        """
        self.add_option("--output",
                               dest = "output",
                               default = None,
                               help = "Also write the JSON report to this file.")

        self.add_option("--timing",
                               dest = "timing",
                               action = "store_true",
                               default = False,
                               help = "Fill runtime_ms in the report (the report is then not byte-reproducible).")

        self.add_option("--logfile",
                               dest = "logfile",
                               default = None,
                               help = "Path of the log file (default ./hypertoep.log).")

        if cmdconf['writesCsv']:
            self.add_option("--csv",
                                   dest = "csv",
                                   default = None,
                                   help = "Write the result table as CSV to this path.")

        if cmdconf['writesDump']:
            self.add_option("--dump",
                                   dest = "dump",
                                   default = None,
                                   help = "Write the truncated operator matrices as JSON to this path.")

        if cmdconf['usesSeed']:
            self.add_option("--seed",
                                   dest = "seed",
                                   type = "int",
                                   default = 0,
                                   help = "Seed of the random test data [default: %default].")
