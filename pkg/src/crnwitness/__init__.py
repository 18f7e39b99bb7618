"""Multistationarity classification and witness certificates for small
mass-action reaction networks."""

__version__ = "0.1.0"
