# encoding='utf-8'

"""
higher-order hyperbolic functions, Tchebysheff m-polynomials,
de Moivre circulant groups, Lucas root functions and companion-matrix recurrences
"""

__version__ = '0.1.0'
