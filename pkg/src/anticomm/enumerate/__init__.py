"""Verification of the counts by solving polynomial systems over F_p."""
