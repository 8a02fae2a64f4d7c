"""Reversible-circuit construction and Clifford+T cost estimation for
composite-field AES S-boxes and the full AES-128/192/256 ciphers."""

from . import aesref, blocks, circuit, gf, linear, sim  # noqa: F401

__version__ = "0.1.0"
