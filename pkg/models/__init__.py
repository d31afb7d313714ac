"""
Models package for galconf.

This package contains the campaign configuration and report models.
"""
