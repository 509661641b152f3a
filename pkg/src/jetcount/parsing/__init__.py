"""Parsing package - expression language for equations and varieties."""
