#!/usr/bin/env python
"""
_ClientMapping_

This allows to have an agnostic client.
For each client command it is possible to define the command line options it
accepts, with their type, default value and help text. The option parser of every
command is built from this mapping, and the effective values of all the options
(defaults included) are echoed into the run report, so that a report is enough
to reproduce the run.
"""

import copy

## In this dictionary, the definitions of 'type' and 'default' refer to the values
## as given on the command line. 'rational' options are read with toExact() and
## 'intlist'/'rationallist' options are comma separated.
parametersMapping = {
    'structure-params': {'r'    : {'default': 2,    'type': 'int',      'help': "Rank r of the Jordan triple."},
                         'a'    : {'default': '2',  'type': 'rational', 'help': "Off-diagonal multiplicity a (rational, e.g. 1 or 3/2)."},
                         'b'    : {'default': '0',  'type': 'rational', 'help': "Boundary multiplicity b (rational)."},
                        },
    'model-options':    {'shape': {'default': '2x2', 'type': 'string',  'help': "Matrix triple C^{RxS}, given as RxS."},
                         'ball' : {'default': None, 'type': 'int',      'help': "Use the unit ball of C^D instead of a matrix triple."},
                         'type' : {'default': 'boundary', 'type': 'choice', 'choices': ['bergman', 'boundary'],
                                   'help': "Measure family: weighted Bergman (needs --nu) or boundary Kepler (needs --k)."},
                         'nu'   : {'default': None, 'type': 'rational', 'help': "Weight parameter nu > p-1 of a weighted Bergman type."},
                         'k'    : {'default': 1,    'type': 'int',      'help': "Number of unit singular values of the boundary orbit."},
                         'lam'  : {'default': None, 'type': 'int',      'help': "Rank bound lambda of the Kepler variety (default: full rank)."},
                        },
    'params':           {'k'    : {'default': None, 'type': 'int',      'help': "Only show the strata of the set with this k."},
                         'lam'  : {'default': None, 'type': 'int',      'help': "Only show the strata of the set with this lambda."},
                        },
    'radial_check':     {'k'          : {'default': 1,    'type': 'int',      'help': "Number of unit singular values."},
                         'lam'        : {'default': None, 'type': 'int',      'help': "Rank bound lambda (default: r)."},
                         'nu'         : {'default': None, 'type': 'rational', 'help': "Weight parameter for k = 0 (default: p+1)."},
                         'family'     : {'default': 'auto', 'type': 'choice',
                                         'choices': ['auto', 'lebesgue', 'kepler_riemann', 'boundary_orbit', 'bergman_weighted', 'boundary_kepler'],
                                         'help': "Density family (default: the one matching k and lambda)."},
                         'max-weight' : {'default': 6,    'type': 'int',      'help': "Check all partitions up to this weight."},
                         'nodes'      : {'default': 0,    'type': 'int',      'help': "Quadrature nodes per coordinate (0 = exact rule for polynomial integrands)."},
                         'tol'        : {'default': None, 'type': 'float',    'help': "Relative tolerance (default 1e-8, 1e-6 for odd a)."},
                         'all'        : {'default': False, 'type': 'bool',    'help': "Sweep every 0 <= k <= lambda <= r."},
                        },
    'toeplitz_check':   {'degree'     : {'default': 4,    'type': 'int',      'help': "Truncation degree D."},
                         'random'     : {'default': 20,   'type': 'int',      'help': "Number of seeded multiplicativity triples."},
                        },
    'peaking':          {'partition'  : {'default': '1',  'type': 'intlist',  'help': "Partition lambda of length ell-1, comma separated."},
                         'n-max'      : {'default': 200,  'type': 'int',      'help': "Largest peaking exponent n."},
                         'tol'        : {'default': 1e-3, 'type': 'float',    'help': "Relative tolerance of the limit."},
                        },
    'boundary_rep':     {'tripotent'  : {'default': 1,    'type': 'int',      'help': "Rank i of the diagonal tripotent e_11 + ... + e_ii."},
                         'symbols'    : {'default': 'z22,conj:z22', 'type': 'string',
                                         'help': "Comma separated symbols: zIJ (coordinate) or conj:zIJ (its conjugate)."},
                         'q'          : {'default': 'zeta', 'type': 'choice', 'choices': ['one', 'zeta'],
                                         'help': "Test function q on the Peirce-0 block: 1 or its first coordinate."},
                         'n-max'      : {'default': 40,   'type': 'int',      'help': "Largest peaking exponent n."},
                         'degree'     : {'default': 0,    'type': 'int',      'help': "Truncation degree D (0 = smallest degree with an adequate tail bound)."},
                         'tol'        : {'default': 1e-3, 'type': 'float',    'help': "Admissible tail bound."},
                        },
    'moments':          {'d'          : {'default': 2,    'type': 'int',      'help': "Dimension d of the ball."},
                         'nu-grid'    : {'default': '1.75,2,2.5,5', 'type': 'rationallist', 'help': "Comma separated weight parameters."},
                         'size'       : {'default': 12,   'type': 'int',      'help': "Hankel matrix size."},
                         'tol'        : {'default': 1e-10, 'type': 'float',   'help': "Eigenvalue tolerance."},
                        },
}


"""
---------------------------------------------------------------------------------------------------------------
Parameter Name          |  Parameter Meaning
---------------------------------------------------------------------------------------------------------------
acceptsArguments        -  Whether the command accepts arguments. (To not confuse with options.)
usesStructure           -  Whether the command takes the --r/--a/--b structure constants.
usesModel               -  Whether the command works on a concrete polynomial model and takes the
                           --shape/--ball/--type/--nu/--k/--lam options.
writesCsv               -  Whether the command can write a CSV table with --csv.
writesDump              -  Whether the command can write its truncated operator matrices as JSON with --dump.
usesSeed                -  Whether the command draws random test data and takes --seed.
---------------------------------------------------------------------------------------------------------------
WARNING: Don't set at the same time usesStructure = True and usesModel = True. The model options
         already determine the structure constants.
---------------------------------------------------------------------------------------------------------------
"""
commandsConfiguration = {
    'params'         : {'acceptsArguments': False, 'usesStructure': True,  'usesModel': False, 'writesCsv': True,  'writesDump': False, 'usesSeed': False},
    'radial_check'   : {'acceptsArguments': False, 'usesStructure': True,  'usesModel': False, 'writesCsv': True,  'writesDump': False, 'usesSeed': False},
    'toeplitz_check' : {'acceptsArguments': False, 'usesStructure': False, 'usesModel': True,  'writesCsv': True,  'writesDump': True,  'usesSeed': True },
    'peaking'        : {'acceptsArguments': False, 'usesStructure': True,  'usesModel': False, 'writesCsv': True,  'writesDump': False, 'usesSeed': False},
    'boundary_rep'   : {'acceptsArguments': False, 'usesStructure': False, 'usesModel': True,  'writesCsv': True,  'writesDump': False, 'usesSeed': False},
    'moments'        : {'acceptsArguments': False, 'usesStructure': False, 'usesModel': False, 'writesCsv': True,  'writesDump': False, 'usesSeed': False},
}

## The peaking command has its own --k/--lam/--nu: it works for any (r, a, b).
for _name in ('k', 'lam', 'nu'):
    parametersMapping['peaking'].setdefault(_name, copy.deepcopy(parametersMapping['model-options'][_name]))


def optionDest(optionName):
    return optionName.replace('-', '_')


def getCommandOptions(command):
    """
    All the options of a command, structure and model options included,
    as {optionName: info}.
    """
    cmdconf = commandsConfiguration.get(command, {})
    options = {}
    if cmdconf.get('usesStructure'):
        options.update(copy.deepcopy(parametersMapping['structure-params']))
    if cmdconf.get('usesModel'):
        options.update(copy.deepcopy(parametersMapping['model-options']))
    options.update(copy.deepcopy(parametersMapping.get(command, {})))
    return options


def getParamDefaultValue(command, paramName):
    return getCommandOptions(command).get(paramName, {}).get('default')
