"""subind - submodular information measures and combinatorial independence."""

__version__ = "0.1.0"
