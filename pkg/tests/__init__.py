# Test Package
"""Unit tests for the gapbound library and CLI."""
