"""Custom exceptions for the toolkit.

This module groups the exceptions raised by the services and repositories,
one module per concern, so the CLI can map each of them to an exit code.
"""
