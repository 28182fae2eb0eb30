"""Exact computations with twisted Yangians and their skew representations."""

__version__ = '0.1.0'
