""" Module storing top-level functions that are exported to the HyperToepAPI
    package. These functions can also be accessed from HyperToepAPI.<name>"""

import logging

from HyperToepClient.ClientUtilities import CALC_LOGGER_NAME

API_LOGGER_NAME = 'HTOEP.HyperToepAPI'

def setLogging(apiLevel = logging.INFO,
               clientLevel = 100,
               calculusLevel = 100):
    """Set logging parameters. Mutes the client by default.
      returns apiLogger"""
    clientLog = logging.getLogger('HTOEP')
    calculusLog = logging.getLogger(CALC_LOGGER_NAME)
    apiLog = logging.getLogger(API_LOGGER_NAME)

    for oneLog, oneLevel in ( (apiLog, apiLevel),
                              (clientLog, clientLevel),
                              (calculusLog, calculusLevel) ):
        oneLog.setLevel(oneLevel)
        oneLog.logfile = "disabled_in_api"

    return apiLog

def getLogger(suffix = ""):
    """ Helper function to get the logger back """
    if suffix:
        suffix = "." + suffix
    return logging.getLogger(API_LOGGER_NAME + suffix)

def getAllLoggers(suffix = ""):
    """ Helper function to get all the loggers - API, client, calculus """
    if suffix:
        suffix = "." + suffix
    return logging.getLogger(API_LOGGER_NAME + suffix), \
            logging.getLogger('HTOEP'), \
            logging.getLogger(CALC_LOGGER_NAME)
