from setuptools import setup, find_packages

setup(
    name="nullmodels",
    version="0.1.0",
    packages=find_packages(),
    install_requires=[
        "pydantic>=2.0.0",
        "python-dotenv>=0.19.0",
        "numpy>=1.22.0",
        "scipy>=1.9.0",
        "pandas>=1.5.0"
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "networkx>=2.8",
            "black>=22.0.0",
            "flake8>=4.0.0",
            "isort>=5.0.0"
        ]
    },
    entry_points={
        'console_scripts': [
            'nullmodels=nullmodels.main:main',
        ],
    },
    python_requires='>=3.9',
)
