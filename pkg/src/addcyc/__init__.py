"""Mixed-alphabet additive cyclic codes over Z_p x Z_{p^2}."""

__version__ = "0.1.0"
