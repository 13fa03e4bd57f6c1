"""Exact spectral theory of algebraic elements over general fields."""
