"""Shared type aliases."""

# Integers extended by ``math.inf`` and ``-math.inf``.
type ExtInt = int | float
