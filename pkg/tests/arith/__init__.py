"""Tests for idem2.arith."""
