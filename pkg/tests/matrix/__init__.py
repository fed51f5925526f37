"""Tests for idem2.matrix."""
