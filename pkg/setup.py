from setuptools import setup, find_packages

with open('requirements.txt') as fin:
    requirements = fin.read().splitlines()


def readme():
    with open('README.rst') as f:
        return f.read()


setup(
    name='superpoint',
    version='0.1.0',
    description='pi-point support theory for elementary supergroup schemes',
    long_description=readme(),
    packages=find_packages(exclude=['tests']),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
    ],
    python_requires='>=3.8',
    include_package_data=True,
    zip_safe=False,
    install_requires=requirements,
    package_data={
        '': ['*.json']
    },
    entry_points={
        'console_scripts': ['superpoint = superpoint.cli:main'],
    },
)
