"""Gray codes for pattern-avoiding permutations."""

__version__ = "0.1.0"
