"""Configuration module for the command line application.

This module initializes the configuration settings for the application.
"""
