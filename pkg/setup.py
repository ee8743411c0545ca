from setuptools import setup


setup(
    version="1.0.0",
    name="sl3coh",
    description=(
        "command line tool computing second cohomology of irreducible SL3 "
        + "modules in positive characteristic"
    ),
    author="LZV.nrw",
    license="MIT",
    python_requires=">=3.10",
    install_requires=[
        "PyYAML==6.*",
        "data-plumber-http>=1.0.0,<2",
        "dcm-common>=4.0.0,<5",
        "sympy>=1.12,<2",
        "numpy>=1.24,<3",
        "jsonschema>=4.0.0,<5",
    ],
    packages=[
        "sl3coh",
        "sl3coh.models",
        "sl3coh.components",
        "sl3coh.commands",
    ],
    package_data={
        "sl3coh": ["data/*", "schema/*.json"],
    },
    include_package_data=True,
    entry_points={
        "console_scripts": ["sl3coh = sl3coh:main"],
    },
)
