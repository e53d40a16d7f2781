class ClientException(Exception):
    """
    general client exception
    Each subclass must define the command line exit code associated with the exception
    exitcode 2 is a usage or parameter error, exitcode 1 a failed or inconclusive check.
    """
    exitcode = 2
    pass


class ParameterException(ClientException):
    """
    Raised when an input lies outside the parameter domain of an operation
    (e.g. r < 1, k > lambda, a pole in a Pochhammer factor).
    """
    exitcode = 2

class ModelNotSupportedException(ParameterException):
    """
    Raised when an operation needs a concrete polynomial model (the ball or a
    matrix triple with a = 2) and the structure constants do not carry one.
    """
    exitcode = 2

class ConfigurationException(ClientException):
    """
    Raised when there is an issue with command line parameters.
    """
    exitcode = 2

class MissingOptionException(ConfigurationException):
    """
    Raised when a mandatory option is not found in the command line.
    """
    exitcode = 2
    missingOption = None

class NumericalException(ClientException):
    """
    Raised when a computation cannot be completed reliably: singular triangular
    systems, series that hit the term cap, log-domain overflow, divergent limits.
    """
    exitcode = 1

class InconclusiveException(NumericalException):
    """
    Raised when a truncation tail bound is too large for the result to be trusted.
    The caller has to raise the truncation degree.
    """
    exitcode = 1
    tailBound = None

class CommandFailedException(ClientException):
    """
    Command completed, but encountered a failure (e.g. a check failed)
    """
    exitcode = 1
