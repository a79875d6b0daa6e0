"""Utility modules for acylbounds."""
