"""Structured reports and their text and YAML/JSON renderings."""
