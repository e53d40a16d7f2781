#!/usr/bin/env python
"""
HyperToep Client modules: hypergeometric measures, Toeplitz operators and
boundary limits on bounded symmetric domains
"""
__version__ = "development"

#the __version__ will be automatically be changed by the release tooling
