"""Computational core: exact algebra, intersection arrays, configuration and reports."""
