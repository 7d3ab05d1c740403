"""Exact-arithmetic families of Lie algebras over the line, and the
classification of generically irreducible Harish-Chandra module families for
the SL(2) contraction."""

__version__ = "0.1.0"
