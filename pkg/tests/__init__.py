"""Tests for oamparity."""
