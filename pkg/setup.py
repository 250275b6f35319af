import setuptools
from os import path
import bubblelab

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md')) as f:
    long_description = f.read()

if __name__ == "__main__":
    setuptools.setup(
        name='bubblelab',
        version=bubblelab.__version__,
        author='bubblelab developers',
        description=
        'A numerical laboratory for bubbling solutions of the critical Schrodinger-Newton equation',
        long_description=long_description,
        long_description_content_type="text/markdown",
        keywords=[
            'Riesz potential', 'Critical exponent', 'Blow-up analysis',
            'Finite differences', 'Nonlocal elliptic equations'
        ],
        license='BSD-3C',
        packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
        include_package_data=True,
        package_data={'bubblelab': ['datasets/data/configs/*.json']},

        install_requires=[
            'setuptools',
            'numpy', 'pandas', 'scipy',
            'numba',
        ],
        extras_require={
            'docs': [
                'sphinx',
                'sphinxcontrib-napoleon',
                'sphinx_rtd_theme',
                'numpydoc',
            ],
            'tests': [
                'pytest',
                'pytest-cov',
            ],
        },
        tests_require=[
            'pytest',
            'pytest-cov',
        ],
        entry_points={
            'console_scripts': ['bubble-lab=bubblelab.cli.main:main'],
        },
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Natural Language :: English',
            'Intended Audience :: Science/Research',
            'Programming Language :: Python :: 3',
        ],
        zip_safe=False,
    )
