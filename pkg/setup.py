from setuptools import setup, find_packages

setup(
    name="SecretaryLab",
    version="1.0.0",
    packages=find_packages(include=['SecretaryLab', 'SecretaryLab.*']),
    python_requires=">=3.10",
    install_requires=[
        # Dependencies will be installed via requirements.txt
    ],
    package_data={
        'SecretaryLab': ['config.yaml'],
    },
    entry_points={
        'console_scripts': ['secretarylab=SecretaryLab.src.main:run'],
    },
)
