"""acylbounds - combinatorial genus bounds for acylindrical surfaces."""

__version__ = "0.1.0"
