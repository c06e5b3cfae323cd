"""Code-representation factory and evaluation harness for name-based bug repair."""

__version__ = "0.1.0"
