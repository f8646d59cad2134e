"""Verification engine for quartic q-series partial sums and their identities."""

__version__ = "0.1.0"
