"""Tests for idem2.datamodel."""
