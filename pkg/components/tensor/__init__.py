"""Tensor products of the Omega modules with restricted modules, and their probes."""
