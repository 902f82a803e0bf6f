"""Shared store for acceptance lines, printed again in the terminal summary."""
RESULTS: dict[int, str] = {}
