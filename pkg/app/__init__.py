"""vknot: normal double coverings of virtual link diagrams.

This package holds the command line application, its services and domain models.
"""
