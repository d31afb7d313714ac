"""
Verification campaigns: one per CLI command, each a list of exact checks.
"""
