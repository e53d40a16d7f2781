""" HyperToepAPI - the in-process face of the HyperToep client
        Runs the check commands without a subprocess and hands back their reports
"""

from HyperToepAPI.TopLevel import setLogging, getAllLoggers, getLogger

# Make sense of HyperToepClient's exceptions by making an exception tree
class APIException(Exception):
    """
        APIException - top of the HyperToepAPI exception tree
    """
    pass

class BadArgumentException(APIException):
    """
        BadArgumentException - Arguments passed didn't pass optparse's muster
    """
    pass


def setUpPackage():
    """ Need to make sure logging is initialized before any tests run. This
        should NOT be called by client functions, it is used by the testing
        suite """
    import logging
    setLogging(logging.DEBUG, logging.DEBUG, logging.DEBUG)

# Used if someone does an "from HyperToepAPI import *"
from HyperToepAPI.RawCommand import execRaw, hyperToepCommand
__all__ = ["setLogging", "getAllLoggers", "getLogger", "execRaw", "hyperToepCommand",
           "APIException", "BadArgumentException"]
