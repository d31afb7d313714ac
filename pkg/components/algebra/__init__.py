"""
The Lie algebra: generators, brackets, grading and translation automorphisms.
"""
