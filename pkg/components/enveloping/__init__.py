"""
The universal enveloping algebra and PBW normal ordering.
"""
