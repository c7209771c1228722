"""Exact computation of categorical traces, 2-characters and induced
2-representations of finite groups."""

__version__ = "0.1.0"
