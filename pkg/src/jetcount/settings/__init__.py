"""Job and application settings.

This package provides:
- Job: A single computation request loaded from job.yaml
- ApplicationSettings: Paths and retry budgets shared by every job
"""
