"""oamparity - OAM-enhanced angular displacement estimation with TMSV and parity detection."""

__version__ = "0.1.0"
