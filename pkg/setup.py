from setuptools import setup, find_packages

setup(
    name="dedekind_lab",
    version="1.0.0",
    description="Dedekind Lab - exact Dedekind and Dedekind-Rademacher sums with identity checks",
    author="Dedekind Lab Team",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "pydantic>=2.0.0",
        "python-dotenv>=1.0.0",
        "loguru>=0.7.0",
        "rich>=13.6.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.4.0",
            "hypothesis>=6.80.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "dedekind-lab=dedekind_lab.cli:main",
        ],
    },
    python_requires=">=3.9",
)
