"""Verification workbench for pre-rigid monoidal categories.

Pre-duals, daggers and their universal property are checked by exhaustive
enumeration or exact rational linear algebra on small instances.
"""

__version__ = "0.1.0"
