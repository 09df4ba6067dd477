"""
Test suite for footprint_simplify package.
"""
