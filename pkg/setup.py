import setuptools
with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="circulant_transfer_toolbox",
    version="0.1.0",
    author="Circulant Transfer Toolbox Developers",
    description="Exact transfer operators for independent sets in strong powers of circulant graphs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages("src"),
    package_dir={"" :"src"},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
    ],
    install_requires=["numpy","pyyaml","sympy","networkx"],
    python_requires='>=3.8',
    tests_require=['pytest'],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['circulant-transfer=circulant_transfer_toolbox.cli:main'],
    }
)
