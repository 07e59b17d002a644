"""Service layer of the toolkit.

Algorithm modules work on immutable diagrams; the class-based services combine them
with the repository and the settings for the CLI controllers.
"""
