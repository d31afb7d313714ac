"""
Rank-one U(h)-free modules on C[X, Y] and their submodule probes.
"""
