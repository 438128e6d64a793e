"""Symplectic spinor valued forms: decompositions over sp(2l, C) and their verification."""

__version__ = "0.1.0"
