"""
Exact arithmetic substrate: Gaussian rational scalars, bivariate polynomials,
dense matrices and sparse linear combinations.
"""
