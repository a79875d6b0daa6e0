"""Core combinatorial modules."""
