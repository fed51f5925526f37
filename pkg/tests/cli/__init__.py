"""Tests for idem2.cli."""
