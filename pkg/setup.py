from setuptools import setup


install_requires = [
    "numpy>=1.20",
    "rich>=10",
    "pyyaml>=5.4,<7",
    "marshmallow>=3.14,<4",
    "click>=8,<9",
    "vlutils>=0.1.22",
    "packaging",
    "joblib>=1.3",
]

console_scripts = [
    "projtc = projtc.cli:entryPoint",
    "projtc-check = projtc.validate.cli:entryPoint",
]


setup(
    install_requires=install_requires,
    extras_require={
        "test": ["pytest>=7", "hypothesis>=6"]
    },
    entry_points={
        "console_scripts": console_scripts
    },
)
