"""Install bezout-kit with setuptools."""
import pathlib

from setuptools import setup

# pylint: disable=redefined-builtin

HERE = pathlib.Path(__file__).parent

LONG_DESCRIPTION = (HERE / "README.rst").read_text(encoding="utf-8")

INSTALL_REQUIRES = [
    line.strip()
    for line in (HERE / "requirements.txt").read_text(encoding="utf-8").splitlines()
    if line.strip()
]

setup(
    name="bezout-kit",
    # Keep in sync with bezoutkit/__init__.py and CHANGELOG.rst.
    version="0.1.0",
    description=(
        "Compute certified gcds, factorizations and normal forms over ℤ, ℚ[x] and H."
    ),
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/x-rst",
    author="Bezout Kit developers",
    classifiers=[
        # yapf: disable
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Education',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11'
        # yapf: enable
    ],
    license="License :: OSI Approved :: MIT License",
    keywords="bezout domain gcd smith normal form elementary divisor ring",
    python_requires=">=3.8",
    install_requires=INSTALL_REQUIRES,
    extras_require={
        "dev": [
            "black==22.12.0",
            "mypy==0.991",
            "pylint==2.15.8",
            "coverage>=6.5.0,<7",
            "twine",
        ],
    },
    packages=["bezoutkit"],
    data_files=[(".", ["README.rst", "requirements.txt", "CHANGELOG.rst"])],
    entry_points={"console_scripts": ["bezout-kit=bezoutkit.main:entry_point"]},
)
