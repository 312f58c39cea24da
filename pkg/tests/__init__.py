"""Tests for jja_bath."""
