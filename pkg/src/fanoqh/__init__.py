"""Chow ring, quantum cohomology and spectra of a rank-13 Fano sixfold."""

__version__ = "0.1.0"
