"""Utility functions for the App."""
