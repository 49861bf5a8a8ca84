"""Exact q-Jacobi-Stirling numbers, q-classical operators and their combinatorics."""

from __future__ import annotations

__version__ = "0.1.0"
