import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="planar_dp_coloring",
    author="cyy",
    version="0.1",
    author_email="cyyever@outlook.com",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_data={"": ["conf/*/*.yaml", "corpus/*.json", "corpus/lists/*.json"]},
    include_package_data=True,
    package_dir={
        "planar_dp_coloring": ".",
        "planar_dp_coloring.coloring": "coloring",
        "planar_dp_coloring.command": "command",
        "planar_dp_coloring.conf": "conf",
        "planar_dp_coloring.cover": "cover",
        "planar_dp_coloring.discharging": "discharging",
        "planar_dp_coloring.graph": "graph",
        "planar_dp_coloring.reducible": "reducible",
        "planar_dp_coloring.tree_colorer": "tree_colorer",
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
)
