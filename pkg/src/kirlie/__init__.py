"""Exact structure theory for nilpotent Lie algebras with 1-dimensional center."""
