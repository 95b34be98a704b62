"""Combinatorics of Bott-Samelson varieties: galleries, the folding category,
T-curves, equivariant cohomology of fixed-point tuples and a type A matrix
backend for chart computations."""

__version__ = "0.1.0"
