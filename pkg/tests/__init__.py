"""
Test suite for the super-BMS3 verification engine.

Tests cover:
- Exact scalar and polynomial arithmetic
- Superalgebra brackets, sigma and the two central conventions
- Ramond and NS module actions, the intertwiner and quotients
- Sweeps, probes and the fault matrix
- Parsers and the command line
"""
