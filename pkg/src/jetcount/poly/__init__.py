"""Polynomial package - exact arithmetic, Groebner bases and elimination."""
