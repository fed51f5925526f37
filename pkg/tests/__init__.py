"""Tests for the idem2 package."""
