"""Whittaker modules over G: data, the induced module, degree orders, search and twists."""
