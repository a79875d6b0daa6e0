"""Tests for acylbounds."""
