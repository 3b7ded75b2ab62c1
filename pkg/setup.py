from setuptools import setup, find_packages

setup(
    name='pattern-gray-codes',
    version='0.1.0',
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    entry_points={
        'console_scripts': ['patgray = patgray.cli:main'],
    },
)
