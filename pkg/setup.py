#  Copyright (c) 2026 smcrc developers. See LICENSE

import pathlib
from datetime import datetime
from setuptools import setup, find_packages

current_path = pathlib.Path(__file__).parent

name = 'smcrc'
ver_path = pathlib.Path(current_path, "smcrc", "version.py")
_ver = {}
exec(ver_path.open("r").read(), _ver)
version = _ver["__version__"]
now = datetime.utcnow()
desc_path = pathlib.Path(current_path, "Readme.md")
long_description = desc_path.open("r").read()

setup(
    name=name,
    version=version,
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    platforms=['POSIX', 'MacOS', 'Windows'],
    python_requires='>=3.9.0',
    install_requires=[
        "ruamel.yaml >= 0.15.77",
        "numpy >= 1.20",
        "scipy >= 1.6"
    ],
    entry_points={
        'console_scripts': [
            'smcrc = smcrc.__main__:main'
        ],
    },

    author='smcrc developers',
    maintainer='smcrc developers',
    description='Particle filters with rejection control and unbiased marginal likelihood estimates',
    long_description=long_description,
    long_description_content_type="text/markdown",
    include_package_data=True,
    package_data={
        "smcrc": ["000.package.data/*.ini", "000.package.data/*.md", "000.package.data/experiments/*.yaml"]
    },
    license='Copyright (c) {} smcrc developers'.format(now.year),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    keywords='sequential monte carlo particle filter rejection control marginal likelihood'
)
