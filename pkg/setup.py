#!/usr/bin/env python
"""Setup file for wordgroups"""

import os

# BEFORE importing setuptools, remove MANIFEST. It isn't properly updated
# when the contents of directories change.
if os.path.exists('MANIFEST'):
    os.remove('MANIFEST')

from setuptools import setup

# Get version and release info, which is all stored in wordgroups/version.py
ver_file = os.path.join('wordgroups', 'version.py')
with open(ver_file) as f:
    exec(f.read())

opts = dict(name=NAME,
            maintainer=MAINTAINER,
            maintainer_email=MAINTAINER_EMAIL,
            description=DESCRIPTION,
            long_description=LONG_DESCRIPTION,
            url=URL,
            download_url=DOWNLOAD_URL,
            license=LICENSE,
            classifiers=CLASSIFIERS,
            author=AUTHOR,
            author_email=AUTHOR_EMAIL,
            platforms=PLATFORMS,
            version=VERSION,
            packages=PACKAGES,
            package_data=PACKAGE_DATA,
            install_requires=REQUIRES,
            tests_require=["pytest"],
            scripts=[BIN + x for x in os.listdir(BIN)],
            zip_safe=False
            )

# Now call the actual setup function
if __name__ == '__main__':
    setup(**opts)
