"""Tamari lattices, tree rotations and Thompson's group F."""

__version__ = "0.1.0"
