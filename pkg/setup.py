from setuptools import setup
from setuptools import find_packages


setup(name='hypercheb',
      version='0.1.0',
      description='higher-order hyperbolic functions, Tchebysheff m-polynomials and companion-matrix recurrences',
      install_requires=['numpy', 'traitlets', 'scipy'],
      extras_require={'test': ['pytest', 'sympy']},
      packages=find_packages(exclude=['tests']),
      entry_points={'console_scripts': ['hypercheb=hypercheb.tools.cli:main']},
      )
