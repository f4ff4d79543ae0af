from setuptools import setup

setup(
    name = "dompoly",
    version = "0.1",
    description = ("Domination polynomials of cycles: counts, explicit families and verification."),
    license = "BSD",
    keywords = "graph theory domination polynomial cycle enumeration",
    packages=['dompoly'],
    package_data={'dompoly': ['data_files/*.txt']},
    install_requires=['numpy', 'networkx'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['dompoly=dompoly.cli:main']},
)
