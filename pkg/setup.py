#!/usr/bin/env python

"""
Standard python setup.py file for HyperToepClient.
To build    : python setup.py build
To install  : python setup.py install --prefix=<some dir>
To clean    : python setup.py clean
To run tests: python setup.py test
"""
from __future__ import print_function

import sys
import os
from unittest import TextTestRunner, TestLoader, TestSuite
from glob import glob
from os.path import splitext, basename, dirname, join as pjoin
from setuptools import setup, Command

sys.path.append(os.path.join(os.getcwd(), 'src/python'))
from HyperToepClient import __version__ as htc_version

required_python_version = (3, 8)

class TestCommand(Command):
    """
    Class to handle unit tests
    """
    user_options = [ ]

    def initialize_options(self):
        """Init method"""
        self._dir = os.getcwd()

    def finalize_options(self):
        """Finalize method"""
        pass

    def run(self):
        """
        Finds all the tests modules in test/python, and runs them.
        The test directories are not packages: each one is put on sys.path
        and its *_t.py files are loaded by module name.
        """
        # list of files to exclude,
        # e.g. [pjoin(self._dir, 'test', 'python', 'exclude_t.py')]
        exclude = []
        testfiles = []
        for tname in glob(pjoin(self._dir, 'test', 'python', '**', '*_t.py'), recursive=True):
            if tname not in exclude:
                testfiles.append(tname)
        testfiles.sort()
        tests = TestSuite()
        try:
            for tname in testfiles:
                if dirname(tname) not in sys.path:
                    sys.path.insert(0, dirname(tname))
                tests.addTests(TestLoader().loadTestsFromName(splitext(basename(tname))[0]))
        except:
            print("\nFail to load unit tests", testfiles)
            raise
        test = TextTestRunner(verbosity = 2)
        result = test.run(tests)
        if not result.wasSuccessful():
            sys.exit(1)

class CleanCommand(Command):
    """
    Class which clean-up all pyc files
    """
    user_options = [ ]

    def initialize_options(self):
        """Init method"""
        self._clean_me = [ ]
        for root, dirs, files in os.walk('.'):
            for fname in files:
                if fname.endswith('.pyc') or fname == 'hypertoep.log':
                    self._clean_me.append(pjoin(root, fname))

    def finalize_options(self):
        """Finalize method"""
        pass

    def run(self):
        """Run method"""
        for clean_me in self._clean_me:
            try:
                os.unlink(clean_me)
            except OSError:
                pass

def dirwalk(relativedir):
    """
    Walk a directory tree and look-up for __init__.py files.
    If found yield those dirs.
    """
    idir = os.path.join(os.getcwd(), relativedir)
    for fname in os.listdir(idir):
        fullpath = os.path.join(idir, fname)
        if  os.path.isdir(fullpath) and not os.path.islink(fullpath):
            for subdir in dirwalk(fullpath):  # recurse into subdir
                yield subdir
        else:
            initdir, initfile = os.path.split(fullpath)
            if  initfile == '__init__.py':
                yield initdir

def find_packages(relativedir):
    "Find list of packages in a given dir"
    packages = []
    for idir in dirwalk(relativedir):
        package = idir.replace(os.getcwd() + '/', '')
        package = package.replace(relativedir + '/', '')
        package = package.replace('/', '.')
        packages.append(package)
    return packages

def main():
    "Main function"
    # packaging metadata needs a PEP 440 version; the in-code "development"
    # placeholder is kept as is and mapped to a dev release here
    version      = htc_version if htc_version != "development" else "0.0.0.dev0"
    name         = "HyperToepClient"
    description  = "Checks for hypergeometric measures, Toeplitz operators and boundary limits on bounded symmetric domains"
    readme       = open('README.md').read() if os.path.exists('README.md') else description
    keywords     = ["HyperToepClient", "Toeplitz", "bounded symmetric domains", "hypergeometric"]
    package_dir  = {"": "src/python"}
    packages     = find_packages('src/python')
    data_files   = [('doc', glob('doc/hypertoepclient/*.rst'))] # list of tuples whose entries are (dir, [data_files])
    classifiers  = [
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics"
    ]

    if  sys.version_info < required_python_version:
        msg = "I'm sorry, but %s %s requires Python %s or later."
        print(msg % (name, version, '.'.join(str(v) for v in required_python_version)))
        sys.exit(1)

    setup(
        name                 = name,
        version              = version,
        description          = description,
        long_description     = readme,
        long_description_content_type = "text/markdown",
        keywords             = keywords,
        packages             = packages,
        package_dir          = package_dir,
        data_files           = data_files,
        scripts              = ['bin/hypertoep.py'],
        python_requires      = '>=3.8',
        install_requires     = ['numpy>=1.20', 'scipy>=1.6', 'sympy>=1.7', 'mpmath>=1.1'],
        classifiers          = classifiers,
        cmdclass             = {'test': TestCommand, 'clean': CleanCommand},
    )

if __name__ == "__main__":
    main()
