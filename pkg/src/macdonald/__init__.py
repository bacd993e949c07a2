"""Nonsymmetric and symmetric Macdonald polynomials with exact arithmetic."""
