"""Tests for idem2.oracle."""
