from setuptools import setup,find_packages

with open("requirements.txt") as f:
    requirements = f.read().splitlines()

requirements = [req for req in requirements if not req.startswith('-e') and req.strip() and req.strip() != "pytest"]

setup(
    name="VGIT Wall Crossing",
    version="0.1",
    author="beniaminenahid",
    packages=find_packages(exclude=["tests"]),
    py_modules=["app"],
    python_requires=">=3.10",
    install_requires=requirements,
    entry_points={"console_scripts": ["vgit=app:main"]},
)
