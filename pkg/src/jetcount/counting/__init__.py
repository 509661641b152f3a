"""Measurement of ``deg S(f)`` by counting solutions of polynomial systems."""
