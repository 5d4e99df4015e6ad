"""Exact Fock-space operator algebra, Hilbert-scheme Betti combinatorics
and an ADHM moment-map laboratory."""

__version__ = "0.1.0"
