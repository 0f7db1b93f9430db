"""wordgroups version/release information"""

# Format expected by setup.py and doc/conf.py: string of form "X.Y.Z"
_version_major = 0
_version_minor = 1
_version_micro = ''  # use '' for first of series, number for 1 and above
_version_extra = 'dev'
#_version_extra = ''  # Uncomment this for full releases

# Construct full version string from these.
_ver = [_version_major, _version_minor]
if _version_micro:
    _ver.append(_version_micro)
if _version_extra:
    _ver.append(_version_extra)

__version__ = '.'.join(map(str, _ver))

CLASSIFIERS = ["Development Status :: 3 - Alpha",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: MIT License",
               "Operating System :: OS Independent",
               "Programming Language :: Python",
               "Topic :: Scientific/Engineering :: Mathematics"]

description = "Return groups, Rauzy graphs and Stallings foldings for substitution languages"

long_description = """

wordgroups
----------

Tools for the languages of primitive substitutions: factor sets, extension
graphs and suffix-connectedness, k-labeled Rauzy graphs, Stallings foldings
of labeled digraphs, finitely generated subgroups of free groups, return
sets and return groups.

The package also carries a verifier for the rank formula of return groups
in suffix-connected languages, and a step-by-step check of the case study
substitution 0 -> 0001, 1 -> 02, 2 -> 001.

"""

NAME = "wordgroups"
MAINTAINER = "wordgroups developers"
MAINTAINER_EMAIL = ""
DESCRIPTION = description
LONG_DESCRIPTION = long_description
URL = ""
DOWNLOAD_URL = ""
LICENSE = "MIT"
AUTHOR = "wordgroups developers"
AUTHOR_EMAIL = ""
PLATFORMS = "OS Independent"
MAJOR = _version_major
MINOR = _version_minor
MICRO = _version_micro
VERSION = __version__
PACKAGES = ['wordgroups',
            'wordgroups.tests']
BIN = 'bin/'
PACKAGE_DATA = {"wordgroups": ["tests/data/*.txt"]}

REQUIRES = ["numpy", "scipy", "networkx"]
