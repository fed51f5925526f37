"""Tests for idem2.core."""
