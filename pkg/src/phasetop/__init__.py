"""Exact tools for phase covector spaces and their topology."""

__version__ = "0.1.0"
