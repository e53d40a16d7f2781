"""
pytest collects the *_t.py files under test/python (see setup.cfg);
the packages themselves live under src/python.
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src', 'python'))


def pytest_configure(config):
    import HyperToepAPI
    HyperToepAPI.setUpPackage()
