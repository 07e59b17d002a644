"""Diagram repository package.

This package contains the diagram repository interface and its file implementation,
which loads diagrams, cut systems, move traces and knot tables from disk.
"""
