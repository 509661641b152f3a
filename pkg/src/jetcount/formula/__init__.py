"""Closed degree formulas over the integers and mod 2."""
