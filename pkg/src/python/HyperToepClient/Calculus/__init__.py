"""
Computational core: parameter algebra, symmetric functions, radial quadrature,
Fischer-Fock algebra, asymptotics and moment problems.
"""
