"""Exact d-invariant obstructions for double branched covers of knots."""

__version__ = "0.1.0"
