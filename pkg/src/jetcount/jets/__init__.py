"""Jet package - chart coordinates, total derivatives and changes of reference."""
