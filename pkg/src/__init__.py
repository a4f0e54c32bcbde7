"""super-BMS3 verification engine: exact algebra, modules and identity sweeps."""

__version__ = "0.1.0"
