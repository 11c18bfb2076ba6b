import glob

from setuptools import setup, find_namespace_packages

setup(name                 = "netdesign",
      version              = "0.1.0",
      description          = "Classify graph elements against optimal matchings, spanning trees and flows",
      long_description     = "Edge and vertex classification against (minimum cost) maximum matchings, minimum spanning trees and maximum flows, three planar construction problems, and brute-force oracles to check them",
      license              = 'GPL',
      classifiers          = ['Development Status :: 4 - Beta',
                              'Intended Audience :: Science/Research',
                              'License :: OSI Approved :: GNU General Public License (GPL)',
                              'Topic :: Scientific/Engineering :: Mathematics'],
      packages             = find_namespace_packages(include=['netdesign', 'netdesign.*']),
      scripts              = glob.glob('scripts/*.py'),
      include_package_data = True,
      python_requires      = '>=3.8',
      install_requires     = ['numpy', 'scipy'],
      extras_require       = {'plot': ['matplotlib']},
      zip_safe             = False
)
