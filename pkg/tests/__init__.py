"""Tests for the rootlength package."""
