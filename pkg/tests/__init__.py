"""Tests for the vknot toolkit."""
