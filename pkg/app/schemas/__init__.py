"""Pydantic schemas for the JSON documents the CLI reads and writes.

This module contains all Pydantic models used for:
- diagram, cut system and move trace input validation
- report serialization

Schemas keep the field names and key order of every document fixed.
"""
