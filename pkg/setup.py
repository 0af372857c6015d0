import setuptools
setuptools.setup(
    name = "corefkit",
    version = "1.0.0",
    license="MIT",
    description = "Corpus statistics, scoring, error analysis and feature export for CorefUD coreference data.",
    python_requires = ">=3.8",
    package_dir = {"": "lib"},
    packages = [
        "corefkit",
        "corefkit.objects",
    ],
    package_data = {
        "corefkit": [
            "data/*.txt",
        ],
    },
    install_requires = [
        "conllu>=4.5",
        "numpy>=1.21",
        "scipy>=1.7",
        "tqdm>=4.62",
    ],
    entry_points = {
        "console_scripts": [
            "corefkit = corefkit.cli:main",
        ],
    },
)
