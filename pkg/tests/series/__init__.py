"""Tests for idem2.series."""
