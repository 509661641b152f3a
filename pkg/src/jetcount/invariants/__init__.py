"""Equation invariants and cuspidal numbers."""
