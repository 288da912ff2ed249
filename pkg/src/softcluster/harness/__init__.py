"""Law suite, space enumeration and the crisp oracle.

Submodules are imported on demand (``from softcluster.harness import laws``).
"""
